#include "hml/k3.hpp"

namespace hml {

namespace {

mpq_class pairQ(const IntMat& gram, const std::vector<mpq_class>& x,
                const std::vector<mpq_class>& y) {
    mpq_class out = 0;
    for (int i = 0; i < gram.rows(); ++i) {
        if (x[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < gram.cols(); ++j)
            out += x[static_cast<size_t>(i)] * mpq_class(gram.at(i, j)) * y[static_cast<size_t>(j)];
    }
    return out;
}

} // namespace

EvenLattice EvenLattice::fromGram(IntMat g) {
    if (g.rows() != g.cols()) inputFail("bad-lattice", "Gram matrix must be square");
    for (int i = 0; i < g.rows(); ++i) {
        if (g.at(i, i) % 2 != 0)
            inputFail("bad-lattice", "Gram diagonal entry at " + std::to_string(i) + " is odd");
        for (int j = 0; j < i; ++j)
            if (g.at(i, j) != g.at(j, i))
                inputFail("bad-lattice", "Gram matrix is not symmetric");
    }
    return {g.rows(), std::move(g)};
}

EvenLattice EvenLattice::hyperbolicU() {
    return fromGram(IntMat::fromRows({{0, 1}, {1, 0}}));
}

EvenLattice EvenLattice::e8Minus() {
    // negated Cartan matrix of E8 (Bourbaki numbering: chain 1-3-4-5-6-7-8
    // with 2 attached to 4)
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
    auto edge = [&](int i, int j) {
        g.at(i - 1, j - 1) = 1;
        g.at(j - 1, i - 1) = 1;
    };
    edge(1, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    edge(2, 4);
    return fromGram(std::move(g));
}

EvenLattice EvenLattice::minusTwo() { return fromGram(IntMat::fromRows({{-2}})); }

EvenLattice directSum(const EvenLattice& a, const EvenLattice& b) {
    IntMat g(a.rank + b.rank, a.rank + b.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.at(i, j) = a.gram.at(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g.at(a.rank + i, a.rank + j) = b.gram.at(i, j);
    return EvenLattice::fromGram(std::move(g));
}

ExtendedLattice::ExtendedLattice(EvenLattice h2) : h2_(std::move(h2)) {
    int n = h2_.rank + 2;
    mukaiGram_ = IntMat(n, n);
    cupGram_ = IntMat(n, n);
    for (int i = 0; i < h2_.rank; ++i)
        for (int j = 0; j < h2_.rank; ++j) {
            mukaiGram_.at(1 + i, 1 + j) = h2_.gram.at(i, j);
            cupGram_.at(1 + i, 1 + j) = h2_.gram.at(i, j);
        }
    mukaiGram_.at(0, n - 1) = -1;
    mukaiGram_.at(n - 1, 0) = -1;
    cupGram_.at(0, n - 1) = 1;
    cupGram_.at(n - 1, 0) = 1;
}

MukaiElementQ MukaiElementQ::of(const MukaiElement& e) {
    MukaiElementQ q;
    q.r = e.r;
    for (const auto& v : e.c) q.c.emplace_back(v);
    q.s = e.s;
    return q;
}

Mat elementColumn(const ExtendedLattice& l, const MukaiElement& e) {
    return elementColumn(l, MukaiElementQ::of(e));
}

Mat elementColumn(const ExtendedLattice& l, const MukaiElementQ& e) {
    if (static_cast<int>(e.c.size()) != l.h2().rank)
        inputFail("rank-mismatch", "element degree-2 part has wrong rank");
    Mat m(Field::rationals(), l.rank(), 1);
    m.at(0, 0) = Scalar::ofRational(e.r);
    for (int i = 0; i < l.h2().rank; ++i)
        m.at(1 + i, 0) = Scalar::ofRational(e.c[static_cast<size_t>(i)]);
    m.at(l.rank() - 1, 0) = Scalar::ofRational(e.s);
    return m;
}

MukaiElementQ elementFromColumn(const ExtendedLattice& l, const Mat& column) {
    if (column.rows() != l.rank() || column.cols() != 1)
        inputFail("rank-mismatch", "column has wrong shape for this lattice");
    MukaiElementQ e;
    e.r = column.at(0, 0).rat();
    for (int i = 0; i < l.h2().rank; ++i) e.c.push_back(column.at(1 + i, 0).rat());
    e.s = column.at(l.rank() - 1, 0).rat();
    return e;
}

HodgePeriod HodgePeriod::make(const EvenLattice& h2, std::vector<mpq_class> re,
                              std::vector<mpq_class> im) {
    if (static_cast<int>(re.size()) != h2.rank || static_cast<int>(im.size()) != h2.rank)
        inputFail("rank-mismatch", "period vectors must have the lattice rank");
    mpq_class rr = pairQ(h2.gram, re, re);
    mpq_class ii = pairQ(h2.gram, im, im);
    mpq_class ri = pairQ(h2.gram, re, im);
    if (rr != ii) inputFail("bad-period", "σ² ≠ 0: re·re ≠ im·im");
    if (ri != 0) inputFail("bad-period", "σ² ≠ 0: re·im ≠ 0");
    if (rr <= 0) inputFail("bad-period", "σ·σ̄ ≤ 0");
    return {std::move(re), std::move(im)};
}

LatticeIsometry LatticeIsometry::make(const ExtendedLattice& l, IntMat g) {
    if (!isIsometry(l, g)) checkFail("not-isometry", "matrix does not preserve the Mukai pairing");
    mpz_class d = detOf(g);
    if (d != 1 && d != -1) checkFail("not-isometry", "determinant is not ±1");
    return {std::move(g)};
}

mpz_class mukaiPairing(const ExtendedLattice& l, const MukaiElement& a, const MukaiElement& b) {
    if (static_cast<int>(a.c.size()) != l.h2().rank || static_cast<int>(b.c.size()) != l.h2().rank)
        inputFail("rank-mismatch", "element degree-2 part has wrong rank");
    mpz_class out = 0;
    for (int i = 0; i < l.h2().rank; ++i)
        for (int j = 0; j < l.h2().rank; ++j)
            out += a.c[static_cast<size_t>(i)] * l.h2().gram.at(i, j) * b.c[static_cast<size_t>(j)];
    out -= a.r * b.s;
    out -= a.s * b.r;
    return out;
}

MukaiElement mukaiVector(const ExtendedLattice& l, mpz_class rk, std::vector<mpz_class> c1,
                         mpz_class c2) {
    if (static_cast<int>(c1.size()) != l.h2().rank)
        inputFail("rank-mismatch", "c1 has wrong rank");
    mpz_class sq = 0;
    for (int i = 0; i < l.h2().rank; ++i)
        for (int j = 0; j < l.h2().rank; ++j)
            sq += c1[static_cast<size_t>(i)] * l.h2().gram.at(i, j) * c1[static_cast<size_t>(j)];
    if (sq % 2 != 0) inputFail("bad-lattice", "c1² is odd in an even lattice");
    MukaiElement v{std::move(rk), std::move(c1), 0};
    v.s = v.r + sq / 2 - c2;
    return v;
}

mpz_class eulerChiLattice(const ExtendedLattice& l, const MukaiElement& v, const MukaiElement& w) {
    return -mukaiPairing(l, v, w);
}

LatticeIsometry reflectionTwist(const ExtendedLattice& l, const MukaiElement& v) {
    if (mukaiPairing(l, v, v) != -2)
        checkFail("not-minus-two", "reflectionTwist needs ⟨v,v⟩ = −2");
    int n = l.rank();
    IntMat col(n, 1);
    col.at(0, 0) = v.r;
    for (int i = 0; i < l.h2().rank; ++i) col.at(1 + i, 0) = v.c[static_cast<size_t>(i)];
    col.at(n - 1, 0) = v.s;
    IntMat t = IntMat::identity(n) + col * col.transpose() * l.mukaiGram();
    return LatticeIsometry::make(l, std::move(t));
}

bool isIsometry(const ExtendedLattice& l, const IntMat& g) {
    if (g.rows() != l.rank() || g.cols() != l.rank()) return false;
    return g.transpose() * l.mukaiGram() * g == l.mukaiGram();
}

HodgeWitness isHodgeIsometry(const ExtendedLattice& l, const IntMat& g,
                             const HodgePeriod& src, const HodgePeriod& dst) {
    if (!isIsometry(l, g)) checkFail("not-isometry", "isHodgeIsometry needs an isometry");
    Field q = Field::rationals();
    int n = l.rank();
    auto embed = [&](const std::vector<mpq_class>& v) {
        Mat m(q, n, 1);
        for (int i = 0; i < l.h2().rank; ++i)
            m.at(1 + i, 0) = Scalar::ofRational(v[static_cast<size_t>(i)]);
        return m;
    };
    Mat gq = g.toRational();
    Mat gRe = gq * embed(src.re);
    Mat gIm = gq * embed(src.im);
    Mat reD = embed(dst.re), imD = embed(dst.im);
    // g·re = a·re′ − b·im′ and g·im = b·re′ + a·im′
    Mat sys(q, 2 * n, 2);
    sys.setBlock(0, 0, reD);
    sys.setBlock(0, 1, -imD);
    sys.setBlock(n, 0, imD);
    sys.setBlock(n, 1, reD);
    auto sol = solveLinear(sys, vstack(gRe, gIm));
    HodgeWitness w;
    if (!sol) return w;
    w.a = sol->at(0, 0).rat();
    w.b = sol->at(1, 0).rat();
    w.ok = !(w.a == 0 && w.b == 0);
    return w;
}

Sublattice neronSeveri(const ExtendedLattice& l, const HodgePeriod& sigma) {
    int r = l.h2().rank;
    // clear each orthogonality constraint row to integers
    IntMat constraints(2, r);
    const std::vector<mpq_class>* rows[2] = {&sigma.re, &sigma.im};
    for (int k = 0; k < 2; ++k) {
        std::vector<mpq_class> row(static_cast<size_t>(r), mpq_class(0));
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i)
                row[static_cast<size_t>(j)] +=
                    (*rows[k])[static_cast<size_t>(i)] * mpq_class(l.h2().gram.at(i, j));
        mpz_class lcm = 1;
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (int j = 0; j < r; ++j) {
            mpq_class scaled = row[static_cast<size_t>(j)] * mpq_class(lcm);
            constraints.at(k, j) = scaled.get_num();
        }
    }
    IntMat basis = integerKernel(constraints);
    IntMat gram = basis.transpose() * l.h2().gram * basis;
    return {std::move(basis), std::move(gram)};
}

Orientation orientationCheck(const ExtendedLattice& l, const IntMat& g,
                             const std::vector<mpz_class>& ample, const HodgePeriod& sigma) {
    if (!isIsometry(l, g)) checkFail("not-isometry", "orientationCheck needs an isometry");
    int r = l.h2().rank;
    if (static_cast<int>(ample.size()) != r) inputFail("rank-mismatch", "ample class has wrong rank");
    std::vector<mpq_class> ampleQ;
    for (const auto& v : ample) ampleQ.emplace_back(v);
    mpq_class a2 = pairQ(l.h2().gram, ampleQ, ampleQ);
    if (a2 <= 0) checkFail("not-positive-four-plane", "ample class has non-positive square");
    if (pairQ(l.h2().gram, ampleQ, sigma.re) != 0 || pairQ(l.h2().gram, ampleQ, sigma.im) != 0)
        checkFail("not-positive-four-plane", "ample class is not orthogonal to the period");

    Field q = Field::rationals();
    int n = l.rank();
    Mat b(q, n, 4);
    b.at(0, 0) = Scalar::ofRational(1);
    b.at(n - 1, 0) = Scalar::ofRational(-a2 / 2);
    for (int i = 0; i < r; ++i) {
        b.at(1 + i, 1) = Scalar::ofRational(ampleQ[static_cast<size_t>(i)]);
        b.at(1 + i, 2) = Scalar::ofRational(sigma.re[static_cast<size_t>(i)]);
        b.at(1 + i, 3) = Scalar::ofRational(sigma.im[static_cast<size_t>(i)]);
    }
    Mat gramQ = l.mukaiGram().toRational();
    Mat planeGram = b.transpose() * gramQ * b;
    // positive definite ⟺ all leading principal minors positive
    for (int k = 1; k <= 4; ++k)
        if (detOf(planeGram.block(0, 0, k, k)).rat() <= 0)
            checkFail("not-positive-four-plane", "4-plane Gram is not positive definite");

    Mat images = g.toRational() * b;
    Mat projected = solveRequired(planeGram, b.transpose() * gramQ * images,
                                  "positive-definite Gram must be invertible");
    Scalar det = detOf(projected);
    if (det.isZero())
        checkFail("degenerate-projection", "projected images of the 4-plane are dependent");
    return det.rat() > 0 ? Orientation::Preserves : Orientation::Reverses;
}

LatticeIsometry extendByH2Sign(const ExtendedLattice& l, int sign) {
    if (sign != 1 && sign != -1) inputFail("bad-sign", "sign must be ±1");
    IntMat g = IntMat::identity(l.rank());
    for (int i = 0; i < l.h2().rank; ++i) g.at(1 + i, 1 + i) = sign;
    return LatticeIsometry::make(l, std::move(g));
}

MukaiElementQ cohomFM(const ExtendedLattice& lx, const ExtendedLattice& ly,
                      const Mat& kernel, const MukaiElementQ& beta) {
    if (kernel.rows() != lx.rank() || kernel.cols() != ly.rank())
        inputFail("rank-mismatch", "kernel matrix must be (rank X) × (rank Y)");
    Mat out = kernel.transpose() * lx.cupGram().toRational() * elementColumn(lx, beta);
    return elementFromColumn(ly, out);
}

Mat diagonalKernel(const ExtendedLattice& l) {
    Mat cup = l.cupGram().toRational();
    auto inv = solveLinear(cup, Mat::identity(Field::rationals(), l.rank()));
    if (!inv || rankOf(cup) != l.rank())
        checkFail("degenerate", "cup pairing is degenerate; no diagonal kernel");
    return *inv;
}

} // namespace hml
