#pragma once

#include <vector>

#include "hml/intmat.hpp"

namespace hml {

/// An even lattice: symmetric integer Gram matrix with even diagonal.
struct EvenLattice {
    int rank = 0;
    IntMat gram;

    static EvenLattice fromGram(IntMat g);
    static EvenLattice hyperbolicU();   // [[0,1],[1,0]]
    static EvenLattice e8Minus();       // E8 rescaled by −1
    static EvenLattice minusTwo();      // [[−2]], a single (−2)-class
};

EvenLattice directSum(const EvenLattice& a, const EvenLattice& b);

/// The Mukai extension Z ⊕ Λ ⊕ Z of an even lattice Λ: degree-0 and
/// degree-4 slots pair to −1, the middle block is Λ's Gram.
class ExtendedLattice {
public:
    explicit ExtendedLattice(EvenLattice h2);

    const EvenLattice& h2() const { return h2_; }
    int rank() const { return h2_.rank + 2; }
    const IntMat& mukaiGram() const { return mukaiGram_; }
    /// Cup-then-integrate pairing ∫ x.β = x₀β₂ + x₁·β₁ + x₂β₀ (no Mukai signs).
    const IntMat& cupGram() const { return cupGram_; }

private:
    EvenLattice h2_;
    IntMat mukaiGram_, cupGram_;
};

/// A graded integral vector (r, c, s) with c in h2 coordinates.
struct MukaiElement {
    mpz_class r;
    std::vector<mpz_class> c;
    mpz_class s;
};

/// Rational variant, used by the cohomological transforms.
struct MukaiElementQ {
    mpq_class r;
    std::vector<mpq_class> c;
    mpq_class s;

    static MukaiElementQ of(const MukaiElement& e);
};

Mat elementColumn(const ExtendedLattice& l, const MukaiElement& e);
Mat elementColumn(const ExtendedLattice& l, const MukaiElementQ& e);
MukaiElementQ elementFromColumn(const ExtendedLattice& l, const Mat& column);

/// A rational period plane: re·re = im·im > 0 and re·im = 0 under the h2
/// Gram (σ² = 0, σ·σ̄ > 0). Validated on construction.
struct HodgePeriod {
    std::vector<mpq_class> re, im;

    static HodgePeriod make(const EvenLattice& h2, std::vector<mpq_class> re,
                            std::vector<mpq_class> im);
};

struct LatticeIsometry {
    IntMat matrix;

    /// Verifies gᵀ·Gram·g = Gram and det = ±1.
    static LatticeIsometry make(const ExtendedLattice& l, IntMat g);
};

mpz_class mukaiPairing(const ExtendedLattice& l, const MukaiElement& a, const MukaiElement& b);

/// (rk, c1, rk + c1²/2 − c2).
MukaiElement mukaiVector(const ExtendedLattice& l, mpz_class rk, std::vector<mpz_class> c1,
                         mpz_class c2);

/// χ = −⟨v,w⟩.
mpz_class eulerChiLattice(const ExtendedLattice& l, const MukaiElement& v, const MukaiElement& w);

/// α ↦ α + ⟨v,α⟩·v for ⟨v,v⟩ = −2; an involutive isometry negating v.
LatticeIsometry reflectionTwist(const ExtendedLattice& l, const MukaiElement& v);

bool isIsometry(const ExtendedLattice& l, const IntMat& g);

struct HodgeWitness {
    bool ok = false;
    mpq_class a, b; // g(σ) = (a + b·i)·σ′
};

/// Does g carry the source period line to the target period line?
HodgeWitness isHodgeIsometry(const ExtendedLattice& l, const IntMat& g,
                             const HodgePeriod& src, const HodgePeriod& dst);

struct Sublattice {
    IntMat basis; // columns, in h2 coordinates
    IntMat gram;
};

/// σ^⊥ ∩ Λ: integer kernel of the two rational orthogonality constraints.
Sublattice neronSeveri(const ExtendedLattice& l, const HodgePeriod& sigma);

enum class Orientation { Preserves, Reverses };

/// Orientation of the positive 4-plane spanned by (1,0,−α²/2), (0,α,0),
/// (0,Re σ,0), (0,Im σ,0): images of the basis are projected back onto the
/// plane and the sign of the 4×4 determinant decides.
Orientation orientationCheck(const ExtendedLattice& l, const IntMat& g,
                             const std::vector<mpz_class>& ample, const HodgePeriod& sigma);

/// Identity on degrees 0 and 4, ±identity on the degree-2 block.
LatticeIsometry extendByH2Sign(const ExtendedLattice& l, int sign);

/// β ↦ Σ (∫_X x_t.β)·y_t for the kernel Σ x_t ⊗ y_t given as a matrix.
MukaiElementQ cohomFM(const ExtendedLattice& lx, const ExtendedLattice& ly,
                      const Mat& kernel, const MukaiElementQ& beta);

/// Σ e_i ⊗ e^i dual w.r.t. the cup-integration pairing; acts as the identity.
Mat diagonalKernel(const ExtendedLattice& l);

} // namespace hml
