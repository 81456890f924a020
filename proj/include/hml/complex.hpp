#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hml/algebra.hpp"

namespace hml {

/// A bounded cochain complex of modules: entries C^i with differentials
/// d^i: C^i → C^{i+1}, d∘d = 0. Degrees outside the stored support are zero
/// modules. Construction validates d²=0 and equivariance.
class Complex {
public:
    explicit Complex(AlgebraPtr a);
    static Complex single(const FDModule& m, int degree = 0);
    static Complex build(AlgebraPtr a, std::map<int, FDModule> entries,
                         std::map<int, Mat> diffs);

    const AlgebraPtr& algebra() const { return algebra_; }
    FDModule entry(int i) const;
    int dimAt(int i) const;
    Mat diffMatrix(int i) const; // dim(i+1) × dim(i)
    ModuleMap diff(int i) const;

    bool isZero() const { return entries_.empty(); }
    int minDeg() const; // 0 for the zero complex
    int maxDeg() const;

    const std::map<int, FDModule>& entries() const { return entries_; }
    const std::map<int, Mat>& diffs() const { return diffs_; }

    friend bool operator==(const Complex& a, const Complex& b);
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    std::map<int, FDModule> entries_; // only nonzero dims
    std::map<int, Mat> diffs_;        // only between stored entries
};

/// Entries re-indexed so that C[n]^i = C^{i+n}; differential scaled by (−1)^n.
Complex shift(const Complex& c, int n);

/// A map of complexes; commuting squares are checked on construction.
class ChainMap {
public:
    ChainMap(Complex source, Complex target, std::map<int, Mat> components);
    static ChainMap zero(Complex source, Complex target);
    static ChainMap identity(const Complex& c);
    /// A module map viewed as a map of one-entry complexes.
    static ChainMap single(const ModuleMap& f, int degree = 0);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    Mat component(int i) const;
    const std::map<int, Mat>& components() const { return comps_; }

    ChainMap compose(const ChainMap& inner) const;
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap operator-() const;
    bool isZero() const;

private:
    Complex source_, target_;
    std::map<int, Mat> comps_;
};

ChainMap shift(const ChainMap& f, int n);

/// Degree −1 family h^i: C^i → D^{i−1}; the homotopy identity is checked by
/// findHomotopy, not here.
struct Homotopy {
    std::map<int, Mat> comps;
    Mat component(int i, const Complex& src, const Complex& tgt) const;
};

/// C → D → E → C[1] with strict chain-map representatives.
struct Triangle {
    Complex c, d, e;
    ChainMap f, g, h;
    Triangle(Complex c_, Complex d_, Complex e_, ChainMap f_, ChainMap g_, ChainMap h_);
};

// ---- cohomology ----

/// H^i as a subquotient with deterministic coordinates: cycleBasis spans
/// ker d^i, lift columns are representatives of the chosen classes, and
/// classOf reduces cycle columns to class coordinates.
struct CohomologyAt {
    FDModule module;
    Mat cycleBasis;    // dim C^i × k
    Mat lift;          // dim C^i × h
    Mat projectCycles; // h × k
    Mat classOf(const Mat& cycleColumns) const;
};

CohomologyAt cohomology(const Complex& c, int i);

/// Dimensions of H^i over the full support.
std::map<int, int> cohomologyDims(const Complex& c);

ModuleMap inducedCohomologyMap(const ChainMap& f, int i);

bool isQuasiIso(const ChainMap& f);

// ---- cone ----

struct ConeData {
    Complex cone;      // Cone^i = C^{i+1} ⊕ D^i, C-part first
    ChainMap include;  // D → Cone
    ChainMap project;  // Cone → C[1]
    Triangle triangle; // C → D → Cone → C[1]
};

ConeData cone(const ChainMap& f);

// ---- homotopy ----

/// Solves f − g = h·d + d·h for A-linear h, free variables zeroed.
std::optional<Homotopy> findHomotopy(const ChainMap& f, const ChainMap& g);

bool nullHomotopic(const ChainMap& f);

// ---- total complexes ----

/// Total Hom complex over the trivial algebra; degree n block i is
/// Hom_A(C^i, D^{i+n}) and d(F) = d_D∘F − (−1)^n F∘d_C.
struct HomComplexData {
    Complex total;
    std::map<int, std::vector<std::pair<int, HomSpace>>> blocks; // per degree, ascending i
    std::map<int, std::vector<int>> offsets;
};

HomComplexData homComplex(const Complex& c, const Complex& d);

/// Post-composition Hom(C,D) → Hom(C,D′) along u: D → D′.
ChainMap homComplexPush(const HomComplexData& src, const HomComplexData& tgt, const ChainMap& u);

/// Pre-composition Hom(C,D) → Hom(C′,D) along u: C′ → C.
ChainMap homComplexPull(const HomComplexData& src, const HomComplexData& tgt, const ChainMap& u);

/// Total tensor complex over A; degree n block i is C^i ⊗_A D^{n−i} and
/// d(c⊗d) = dc⊗d + (−1)^i c⊗dd.
struct TensorComplexData {
    Complex total;
    std::map<int, std::vector<std::pair<int, TensorSpace>>> blocks;
    std::map<int, std::vector<int>> offsets;
};

TensorComplexData tensorComplex(const Complex& c, const Complex& d);

// ---- duality and change of rings ----

/// Contravariant dual: (DC)^i = D(C^{−i}) with transposed differentials.
Complex dualComplex(const Complex& c);
ChainMap dualChainMap(const ChainMap& f);

Complex restrictComplex(const AlgebraMap& phi, const Complex& c);
Complex extendComplex(const AlgebraMap& phi, const Complex& c);

/// Ground-field module of dimension d (building block of Hom complexes).
FDModule kModule(Field f, int d);

} // namespace hml
