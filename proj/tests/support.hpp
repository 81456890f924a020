#pragma once

// Shared fixtures and deterministic generators for the test suites.

#include <random>
#include <vector>

#include "hml/algebra.hpp"
#include "hml/complex.hpp"
#include "hml/linsys.hpp"

namespace hmltest {

using namespace hml;

inline const Field Q = Field::rationals();
inline const Field F5 = Field::prime(5);

// k[x]/(x²): basis {1, x}
inline AlgebraPtr dualNumbers(Field f) {
    auto S = [&](long n) { return Scalar::of(f, n); };
    std::vector<std::vector<std::vector<Scalar>>> c{
        {{S(1), S(0)}, {S(0), S(1)}},
        {{S(0), S(1)}, {S(0), S(0)}},
    };
    return Algebra::make(f, {"1", "x"}, std::move(c), {S(1), S(0)});
}

// k[x]/(x³): basis {1, x, x²}
inline AlgebraPtr truncPoly3(Field f) {
    auto S = [&](long n) { return Scalar::of(f, n); };
    auto e = [&](int i) {
        std::vector<Scalar> v(3, S(0));
        v[i] = S(1);
        return v;
    };
    std::vector<Scalar> zero(3, S(0));
    std::vector<std::vector<std::vector<Scalar>>> c{
        {e(0), e(1), e(2)},
        {e(1), e(2), zero},
        {e(2), zero, zero},
    };
    return Algebra::make(f, {"1", "x", "x2"}, std::move(c), e(0));
}

// k[x,y]/(x², xy, y²): basis {1, x, y}
inline AlgebraPtr fatPoint(Field f) {
    auto S = [&](long n) { return Scalar::of(f, n); };
    auto e = [&](int i) {
        std::vector<Scalar> v(3, S(0));
        v[i] = S(1);
        return v;
    };
    std::vector<Scalar> zero(3, S(0));
    std::vector<std::vector<std::vector<Scalar>>> c{
        {e(0), e(1), e(2)},
        {e(1), zero, zero},
        {e(2), zero, zero},
    };
    return Algebra::make(f, {"1", "x", "y"}, std::move(c), e(0));
}

// k × k: basis of idempotents {e1, e2}, unit e1+e2
inline AlgebraPtr productField(Field f) {
    auto S = [&](long n) { return Scalar::of(f, n); };
    std::vector<std::vector<std::vector<Scalar>>> c{
        {{S(1), S(0)}, {S(0), S(0)}},
        {{S(0), S(0)}, {S(0), S(1)}},
    };
    return Algebra::make(f, {"e1", "e2"}, std::move(c), {S(1), S(1)});
}

// the simple module k with x acting by zero, over k[x]/(x²) or any algebra
// whose non-unit basis elements may act by zero
inline FDModule simpleModule(const AlgebraPtr& a) {
    Field f = a->field();
    std::vector<Mat> action;
    for (int i = 0; i < a->dim(); ++i) action.push_back(Mat(f, 1, 1));
    // unit coordinates define the action of each basis vector on k: b_i ↦ λ_i
    // with λ determined by requiring unit ↦ 1 and nilpotents ↦ 0; for the
    // test algebras the first basis vector is (or sums to) the unit
    for (int i = 0; i < a->dim(); ++i)
        action[i].at(0, 0) = a->unit()[i].isZero() ? Scalar::zero(f) : Scalar::one(f);
    return FDModule(a, std::move(action));
}

inline Mat randomMat(Field f, int rows, int cols, std::mt19937_64& rng, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::of(f, d(rng));
    return m;
}

// random quotient of a free module; dims stay small but arbitrary shapes occur
inline FDModule randomModule(const AlgebraPtr& a, std::mt19937_64& rng, int maxFreeRank = 2) {
    std::uniform_int_distribution<int> rk(0, maxFreeRank);
    int n = rk(rng);
    FDModule free = freeModule(a, n);
    if (free.dim() == 0) return free;
    std::uniform_int_distribution<int> nrel(0, free.dim() - 1);
    int r = nrel(rng);
    Mat gens = randomMat(a->field(), free.dim(), r, rng);
    // close the span under the action to get a submodule
    Mat span = gens;
    for (int i = 0; i < a->dim(); ++i) span = hstack(span, free.action(i) * gens);
    span = imageBasis(span);
    return quotientModule(free, span).projection.target();
}

inline FDModule randomModuleCapped(const AlgebraPtr& a, std::mt19937_64& rng, int maxDim,
                                   bool allowZero = true) {
    int maxFreeRank = std::max(2, maxDim / std::max(1, a->dim() - 1));
    for (int tries = 0; tries < 40; ++tries) {
        FDModule m = randomModule(a, rng, maxFreeRank);
        if (m.dim() <= maxDim && (allowZero || m.dim() > 0)) return m;
    }
    return allowZero ? FDModule::zero(a) : simpleModule(a);
}

// random short exact sequence 0 → S → M → M/S → 0
struct RandomSES {
    ModuleMap inc;
    ModuleMap prj;
};

inline RandomSES randomSES(const AlgebraPtr& a, std::mt19937_64& rng, int maxMidDim = 4) {
    FDModule m = randomModuleCapped(a, rng, maxMidDim, false);
    std::uniform_int_distribution<int> ncols(0, m.dim());
    Mat gens = randomMat(a->field(), m.dim(), ncols(rng), rng);
    Mat span = gens;
    for (int i = 0; i < a->dim(); ++i) span = hstack(span, m.action(i) * gens);
    span = imageBasis(span);
    return {submoduleInclusion(m, span), quotientModule(m, span).projection};
}

// random equivariant map drawn from the hom space
inline ModuleMap randomModuleMap(const FDModule& m, const FDModule& n, std::mt19937_64& rng) {
    Field f = m.algebra()->field();
    HomSpace hom = homModule(m, n);
    Mat mat(f, n.dim(), m.dim());
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const Mat& b : hom.basis) {
        Scalar s = Scalar::of(f, coeff(rng));
        if (!s.isZero()) mat = mat + b.scaled(s);
    }
    return ModuleMap(m, n, mat);
}

// product algebra A × B with componentwise multiplication
inline AlgebraPtr productAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    Field f = a->field();
    int da = a->dim(), db = b->dim(), n = da + db;
    std::vector<std::vector<std::vector<Scalar>>> c(
        n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(f))));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < da; ++k) c[i][j][k] = a->structureConstant(i, j, k);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < db; ++k) c[da + i][da + j][da + k] = b->structureConstant(i, j, k);
    std::vector<Scalar> unit;
    for (int i = 0; i < da; ++i) unit.push_back(a->unit()[i]);
    for (int i = 0; i < db; ++i) unit.push_back(b->unit()[i]);
    std::vector<std::string> labels;
    for (const auto& l : a->labels()) labels.push_back(l + ",0");
    for (const auto& l : b->labels()) labels.push_back("0," + l);
    return Algebra::make(f, std::move(labels), std::move(c), std::move(unit));
}

// diagonal a ↦ (a, a) into A × A
inline AlgebraMap diagonalMap(const AlgebraPtr& a, const AlgebraPtr& prod) {
    Mat m = vstack(Mat::identity(a->field(), a->dim()), Mat::identity(a->field(), a->dim()));
    return AlgebraMap(a, prod, std::move(m));
}

// random bounded complex: entries are random small modules, differentials are
// drawn from the solution space of {equivariant, d∘d = 0} degree by degree
inline Complex randomComplex(const AlgebraPtr& a, std::mt19937_64& rng, int maxEntryDim,
                             int maxAmplitude) {
    Field f = a->field();
    std::uniform_int_distribution<int> ampD(0, maxAmplitude);
    std::uniform_int_distribution<int> baseD(-2, 2);
    int amp = ampD(rng);
    int base = baseD(rng);
    std::vector<FDModule> mods;
    for (int i = 0; i <= amp; ++i) mods.push_back(randomModuleCapped(a, rng, maxEntryDim));

    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    std::uniform_int_distribution<int> coeff(-2, 2);
    Mat prev(f, 0, 0);
    bool havePrev = false;
    for (int i = 0; i <= amp; ++i) {
        if (mods[i].dim() > 0) entries.emplace(base + i, mods[i]);
        if (i == amp) break;
        if (mods[i].dim() == 0 || mods[i + 1].dim() == 0) {
            havePrev = false;
            continue;
        }
        MatrixSystem sys(f);
        int id = sys.addUnknown(mods[i + 1].dim(), mods[i].dim());
        for (int t = 0; t < a->dim(); ++t)
            sys.addEquation({{id, Mat::identity(f, mods[i + 1].dim()), mods[i].action(t)},
                             {id, -mods[i + 1].action(t), Mat::identity(f, mods[i].dim())}},
                            Mat(f, mods[i + 1].dim(), mods[i].dim()));
        if (havePrev)
            sys.addEquation({{id, Mat::identity(f, mods[i + 1].dim()), prev}},
                            Mat(f, mods[i + 1].dim(), prev.cols()));
        auto basis = sys.kernel();
        Mat d(f, mods[i + 1].dim(), mods[i].dim());
        for (const auto& b : basis) {
            Scalar s = Scalar::of(f, coeff(rng));
            if (!s.isZero()) d = d + b[0].scaled(s);
        }
        if (!d.isZero()) diffs.emplace(base + i, d);
        prev = d;
        havePrev = true;
    }
    return Complex::build(a, std::move(entries), std::move(diffs));
}

// random elements of the space of chain maps c → d
inline std::vector<ChainMap> randomChainMaps(const Complex& c, const Complex& d,
                                             std::mt19937_64& rng, int count) {
    Field f = c.algebra()->field();
    const AlgebraPtr& a = c.algebra();
    MatrixSystem sys(f);
    std::map<int, int> blockOf;
    int lo = std::min(c.minDeg(), d.minDeg());
    int hi = std::max(c.maxDeg(), d.maxDeg());
    for (int i = lo; i <= hi; ++i) {
        if (c.dimAt(i) == 0 || d.dimAt(i) == 0) continue;
        int id = sys.addUnknown(d.dimAt(i), c.dimAt(i));
        blockOf[i] = id;
        for (int t = 0; t < a->dim(); ++t)
            sys.addEquation({{id, Mat::identity(f, d.dimAt(i)), c.entry(i).action(t)},
                             {id, -d.entry(i).action(t), Mat::identity(f, c.dimAt(i))}},
                            Mat(f, d.dimAt(i), c.dimAt(i)));
    }
    for (int i = lo - 1; i <= hi; ++i) {
        if (d.dimAt(i + 1) == 0 || c.dimAt(i) == 0) continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto it = blockOf.find(i + 1); it != blockOf.end())
            terms.push_back({it->second, Mat::identity(f, d.dimAt(i + 1)), c.diffMatrix(i)});
        if (auto it = blockOf.find(i); it != blockOf.end())
            terms.push_back({it->second, -d.diffMatrix(i), Mat::identity(f, c.dimAt(i))});
        sys.addEquation(terms, Mat(f, d.dimAt(i + 1), c.dimAt(i)));
    }
    auto basis = sys.kernel();
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<ChainMap> out;
    for (int t = 0; t < count; ++t) {
        std::map<int, Mat> comps;
        for (const auto& [deg, id] : blockOf) comps.emplace(deg, Mat(f, d.dimAt(deg), c.dimAt(deg)));
        for (const auto& b : basis) {
            Scalar s = Scalar::of(f, coeff(rng));
            if (s.isZero()) continue;
            for (const auto& [deg, id] : blockOf)
                comps[deg] = comps[deg] + b[id].scaled(s);
        }
        out.emplace_back(c, d, std::move(comps));
    }
    return out;
}

// f plus d∘h + h∘d for a random A-linear degree −1 family h; always a chain
// map homotopic to f
inline ChainMap perturbByHomotopy(const ChainMap& f, std::mt19937_64& rng) {
    const Complex& c = f.source();
    const Complex& d = f.target();
    Field fl = c.algebra()->field();
    std::uniform_int_distribution<int> coeff(-2, 2);
    int lo = std::min(c.minDeg(), d.minDeg());
    int hi = std::max(c.maxDeg(), d.maxDeg()) + 1;
    std::map<int, Mat> h;
    for (int i = lo; i <= hi; ++i) {
        if (c.dimAt(i) == 0 || d.dimAt(i - 1) == 0) continue;
        HomSpace hs = homModule(c.entry(i), d.entry(i - 1));
        Mat m(fl, d.dimAt(i - 1), c.dimAt(i));
        for (const Mat& b : hs.basis) {
            Scalar s = Scalar::of(fl, coeff(rng));
            if (!s.isZero()) m = m + b.scaled(s);
        }
        h.emplace(i, std::move(m));
    }
    auto hAt = [&](int i) {
        auto it = h.find(i);
        if (it != h.end()) return it->second;
        return Mat(fl, d.dimAt(i - 1), c.dimAt(i));
    };
    std::map<int, Mat> comps;
    for (int i = lo; i <= hi; ++i) {
        if (c.dimAt(i) == 0 || d.dimAt(i) == 0) continue;
        comps.emplace(i, f.component(i) + d.diffMatrix(i - 1) * hAt(i) + hAt(i + 1) * c.diffMatrix(i));
    }
    return ChainMap(c, d, std::move(comps));
}

// direct sum of two complexes with the inclusion of the first summand
struct ComplexSum {
    Complex sum;
    ChainMap includeFirst;
};

inline ComplexSum directSumComplex(const Complex& x, const Complex& y) {
    const AlgebraPtr& a = x.algebra();
    Field f = a->field();
    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    int lo = std::min(x.minDeg(), y.minDeg());
    int hi = std::max(x.maxDeg(), y.maxDeg());
    for (int i = lo; i <= hi; ++i) {
        DirectSum ds = directSum(a, {x.entry(i), y.entry(i)});
        if (ds.module.dim() > 0) entries.emplace(i, ds.module);
    }
    for (int i = lo; i <= hi; ++i) {
        int rows = x.dimAt(i + 1) + y.dimAt(i + 1);
        int cols = x.dimAt(i) + y.dimAt(i);
        if (rows == 0 || cols == 0) continue;
        Mat m(f, rows, cols);
        m.setBlock(0, 0, x.diffMatrix(i));
        m.setBlock(x.dimAt(i + 1), x.dimAt(i), y.diffMatrix(i));
        diffs.emplace(i, std::move(m));
    }
    Complex sum = Complex::build(a, std::move(entries), std::move(diffs));
    std::map<int, Mat> inc;
    for (int i = lo; i <= hi; ++i) {
        if (x.dimAt(i) == 0 || sum.dimAt(i) == 0) continue;
        Mat m(f, sum.dimAt(i), x.dimAt(i));
        m.setBlock(0, 0, Mat::identity(f, x.dimAt(i)));
        inc.emplace(i, std::move(m));
    }
    ChainMap includeFirst(x, sum, std::move(inc));
    return {std::move(sum), std::move(includeFirst)};
}

} // namespace hmltest
