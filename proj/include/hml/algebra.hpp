#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hml/mat.hpp"

namespace hml {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional commutative unital algebra over the ground field,
/// given by structure constants: b_i · b_j = Σ_k c[i][j][k] b_k.
/// Construction enforces commutativity, associativity and unitality and
/// names the violating basis triple otherwise.
class Algebra {
public:
    static AlgebraPtr make(Field f, std::vector<std::string> labels,
                           std::vector<std::vector<std::vector<Scalar>>> structure,
                           std::vector<Scalar> unit);

    /// The ground field as an algebra (dim 1, basis "1").
    static AlgebraPtr ground(Field f);

    int dim() const { return dim_; }
    Field field() const { return field_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const Scalar& structureConstant(int i, int j, int k) const;

    /// Matrix of left multiplication by b_i on the algebra itself.
    const Mat& leftMult(int i) const { return leftMult_[i]; }

    /// Left multiplication by an arbitrary element (coordinate column).
    Mat leftMultBy(const Mat& coords) const;

    /// Product of two coordinate columns.
    Mat multiply(const Mat& x, const Mat& y) const;

    Mat unitColumnVec() const;

    bool structurallyEqual(const Algebra& o) const;

private:
    Algebra() = default;
    Field field_ = Field::rationals();
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Scalar>>> c_;
    std::vector<Scalar> unit_;
    std::vector<Mat> leftMult_;
};

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// A finite-dimensional module, presented by one action matrix per algebra
/// basis element. Construction checks action(1) = id and that the action
/// matrices satisfy the structure constants.
class FDModule {
public:
    FDModule(AlgebraPtr algebra, std::vector<Mat> action);

    static FDModule zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    int dim() const { return dim_; }
    const Mat& action(int i) const { return action_[i]; }

    /// Action of an arbitrary algebra element (coordinate column).
    Mat actionOf(const Mat& coords) const;

    friend bool operator==(const FDModule& a, const FDModule& b);
    friend bool operator!=(const FDModule& a, const FDModule& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    int dim_;
    std::vector<Mat> action_;
};

/// An equivariant map between modules over the same algebra. The matrix is
/// target.dim × source.dim and acts on coordinate columns.
class ModuleMap {
public:
    ModuleMap(FDModule source, FDModule target, Mat matrix);

    static ModuleMap zero(FDModule source, FDModule target);
    static ModuleMap identity(FDModule m);

    const FDModule& source() const { return source_; }
    const FDModule& target() const { return target_; }
    const Mat& matrix() const { return m_; }

    ModuleMap compose(const ModuleMap& inner) const; // this ∘ inner
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap operator-() const;

    bool isZero() const { return m_.isZero(); }

private:
    FDModule source_, target_;
    Mat m_;
};

/// An algebra homomorphism A → B; matrix columns are the images of A's basis
/// in B coordinates. Construction checks unit and multiplicativity.
class AlgebraMap {
public:
    AlgebraMap(AlgebraPtr source, AlgebraPtr target, Mat matrix);

    static AlgebraMap identity(AlgebraPtr a);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const Mat& matrix() const { return m_; }

private:
    AlgebraPtr source_, target_;
    Mat m_;
};

// ---- abelian-category operations ----

/// A^n with the block-diagonal regular action; generator j sits at
/// coordinates [j·dim A, (j+1)·dim A) as the unit vector of A.
FDModule freeModule(const AlgebraPtr& a, int n);

/// Column j of the returned matrix is the coordinate vector of generator j.
Mat freeModuleGenerators(const AlgebraPtr& a, int n);

/// The module map A^n → M sending generator j to the j-th column of `gens`.
ModuleMap freeCover(const FDModule& m, const Mat& gens);

/// Deterministic generating subset of the standard basis (greedy, leftmost
/// vector not yet in the generated submodule).
std::vector<int> moduleGenerators(const FDModule& m);

/// Induced module structure on an invariant subspace; `basis` columns must
/// be independent and span an action-invariant subspace.
ModuleMap submoduleInclusion(const FDModule& ambient, const Mat& basis);

struct QuotientModule {
    ModuleMap projection; // ambient → quotient
    Mat section;          // quotient coords → ambient representatives
};

/// Quotient of `ambient` by the invariant subspace spanned by `basis`
/// columns; quotient coordinates are the non-pivot coordinates of the
/// subspace's row-reduced basis.
QuotientModule quotientModule(const FDModule& ambient, const Mat& basis);

struct KernelImageCokernel {
    ModuleMap kernel;   // inclusion ker f → source
    ModuleMap image;    // inclusion im f → target
    ModuleMap cokernel; // projection target → coker f
};

KernelImageCokernel kernelImageCokernel(const ModuleMap& f);

struct HomSpace {
    FDModule module;        // Hom_A(M,N) with the post-composition action
    std::vector<Mat> basis; // each N.dim × M.dim
};

HomSpace homModule(const FDModule& m, const FDModule& n);

/// Writes an equivariant map as a coordinate column in `hom.basis`.
Mat homCoordinatesOf(const HomSpace& hom, const Mat& map);

struct TensorSpace {
    FDModule module;
    Mat projection; // dim × (dim M · dim N), from pure-tensor coordinates
    Mat section;    // pure-tensor representatives of the chosen coordinates
};

/// M ⊗_A N as the cokernel of m·a ⊗ n − m ⊗ a·n inside M ⊗_k N.
TensorSpace tensorModule(const FDModule& m, const FDModule& n);

/// Map M⊗N → M'⊗N' induced by f: M→M', g: N→N' on the chosen presentations.
Mat tensorInducedMatrix(const TensorSpace& src, const TensorSpace& tgt,
                        const Mat& f, const Mat& g);

/// Linear dual with transposed action.
FDModule dualModule(const FDModule& m);

/// Contravariant dual of a map: D(f): D(N) → D(M) with matrix fᵀ.
ModuleMap dualMap(const ModuleMap& f);

/// Same space, action pulled back along φ (exact).
FDModule restrictScalars(const AlgebraMap& phi, const FDModule& n);

struct ExtendedScalars {
    FDModule module; // B ⊗_A M over B
    Mat projection;  // dim × (dim B · dim M)
    Mat section;
};

ExtendedScalars extendScalars(const AlgebraMap& phi, const FDModule& m);

/// B⊗f on the chosen presentations of B⊗M and B⊗M'.
Mat extendScalarsInducedMatrix(const AlgebraMap& phi, const ExtendedScalars& src,
                               const ExtendedScalars& tgt, const Mat& f);

struct DirectSum {
    FDModule module;
    std::vector<Mat> embed;   // component → sum
    std::vector<Mat> project; // sum → component
};

DirectSum directSum(const AlgebraPtr& a, const std::vector<FDModule>& parts);

struct PushoutAlgebra {
    AlgebraPtr algebra;  // B ⊗_A C
    AlgebraMap fromB;    // b ↦ b⊗1
    AlgebraMap fromC;    // c ↦ 1⊗c
};

PushoutAlgebra pushoutAlgebra(const AlgebraMap& phiB, const AlgebraMap& phiC);

} // namespace hml
