#include <doctest.h>

#include "hml/complex.hpp"
#include "hml/linsys.hpp"
#include "support.hpp"

using namespace hml;
using namespace hmltest;

namespace {

// 0 → A --x--> A → 0 in degrees 0,1 over k[x]/(x²)
Complex xComplex(const AlgebraPtr& A) {
    FDModule reg = freeModule(A, 1);
    std::map<int, FDModule> entries{{0, reg}, {1, reg}};
    std::map<int, Mat> diffs{{0, reg.action(1)}};
    return Complex::build(A, std::move(entries), std::move(diffs));
}

} // namespace

TEST_CASE("makeComplex validation") {
    auto A = dualNumbers(Q);
    FDModule reg = freeModule(A, 1);

    CHECK(Complex::single(reg).dimAt(0) == 2);
    CHECK(xComplex(A).dimAt(1) == 2);

    // two identity maps in a row: id∘id ≠ 0
    std::map<int, FDModule> entries{{0, reg}, {1, reg}, {2, reg}};
    Mat id = Mat::identity(Q, 2);
    std::map<int, Mat> diffs{{0, id}, {1, id}};
    CHECK_THROWS_AS(Complex::build(A, std::move(entries), std::move(diffs)), InputError);
}

TEST_CASE("shift reindexes and flips signs") {
    auto A = dualNumbers(Q);
    Complex c = xComplex(A);
    CHECK(shift(c, 0) == c);

    Complex once = shift(Complex::single(simpleModule(A)), 1);
    CHECK(once.dimAt(-1) == 1);
    CHECK(once.dimAt(0) == 0);

    CHECK(shift(shift(c, 1), 1) == shift(c, 2));
    CHECK(shift(c, 1).diffMatrix(-1) == -c.diffMatrix(0));
    CHECK(shift(shift(c, 1), -1) == c);
}

TEST_CASE("cohomology of the worked examples") {
    auto A = dualNumbers(Q);
    FDModule reg = freeModule(A, 1);

    // acyclic 0 → M --id--> M → 0
    std::map<int, FDModule> e1{{0, reg}, {1, reg}};
    std::map<int, Mat> d1{{0, Mat::identity(Q, 2)}};
    Complex acyclic = Complex::build(A, std::move(e1), std::move(d1));
    for (int i = -1; i <= 2; ++i) CHECK(cohomology(acyclic, i).module.dim() == 0);

    Complex xc = xComplex(A);
    CHECK(cohomology(xc, 0).module.dim() == 1);
    CHECK(cohomology(xc, 1).module.dim() == 1);

    Complex single = Complex::single(reg);
    CHECK(cohomology(single, 0).module.dim() == 2);
}

TEST_CASE("inducedCohomologyMap identity and zero") {
    auto A = dualNumbers(Q);
    Complex xc = xComplex(A);
    ModuleMap idH = inducedCohomologyMap(ChainMap::identity(xc), 0);
    CHECK(idH.matrix().isIdentity());
    ModuleMap zeroH = inducedCohomologyMap(ChainMap::zero(xc, xc), 1);
    CHECK(zeroH.isZero());
    CHECK(isQuasiIso(ChainMap::identity(xc)));
    CHECK(!isQuasiIso(ChainMap::zero(xc, xc)));
}

TEST_CASE("cone of a module map computes kernel and cokernel") {
    auto A = dualNumbers(Q);
    FDModule reg = freeModule(A, 1);
    ModuleMap byX(reg, reg, reg.action(1));
    ConeData cd = cone(ChainMap::single(byX));
    // H^{-1}(Cone) = ker, H^0(Cone) = coker
    CHECK(cohomology(cd.cone, -1).module.dim() == 1);
    CHECK(cohomology(cd.cone, 0).module.dim() == 1);

    // cone of the identity is null-homotopic
    ConeData cid = cone(ChainMap::identity(xComplex(A)));
    CHECK(nullHomotopic(ChainMap::identity(cid.cone)));

    // cone of the zero map is C[1] ⊕ D with block-diagonal differential
    Complex xc = xComplex(A);
    ConeData cz = cone(ChainMap::zero(xc, xc));
    Complex sh = shift(xc, 1);
    for (int i = -2; i <= 2; ++i)
        CHECK(cz.cone.dimAt(i) == sh.dimAt(i) + xc.dimAt(i));
    CHECK(cz.cone.diffMatrix(-1).block(2, 0, 2, 2).isZero()); // f-block vanishes
}

TEST_CASE("findHomotopy finds witnesses and refuses impossibilities") {
    auto A = dualNumbers(Q);
    Complex xc = xComplex(A);
    ChainMap id = ChainMap::identity(xc);

    // f = g → the zero homotopy works
    auto h = findHomotopy(id, id);
    REQUIRE(h.has_value());
    for (const auto& [deg, m] : h->comps) CHECK(m.isZero());

    // id vs 0 on the complex [M in degree 0], M ≠ 0 → no witness
    Complex single = Complex::single(freeModule(A, 1));
    CHECK(!findHomotopy(ChainMap::identity(single), ChainMap::zero(single, single)).has_value());
}

TEST_CASE("homotopies are A-linear, not merely k-linear") {
    // over k[x]/(x²), id on [A --x--> A] is NOT null-homotopic (H ≠ 0),
    // and the homotopy system must reject k-linear-only candidates
    auto A = dualNumbers(Q);
    Complex xc = xComplex(A);
    CHECK(!nullHomotopic(ChainMap::identity(xc)));
}

TEST_CASE("homComplex worked examples") {
    auto A = dualNumbers(Q);
    FDModule reg = freeModule(A, 1);
    FDModule k = simpleModule(A);

    // Hom(A, M) in degree 0 with zero differential
    HomComplexData h1 = homComplex(Complex::single(reg), Complex::single(k));
    CHECK(h1.total.dimAt(0) == 1);
    CHECK(h1.total.minDeg() == 0);
    CHECK(h1.total.maxDeg() == 0);

    // C = [A --x--> A], D = k: degree parts (1,1), zero differential
    HomComplexData h2 = homComplex(xComplex(A), Complex::single(k));
    CHECK(h2.total.dimAt(-1) == 1);
    CHECK(h2.total.dimAt(0) == 1);
    CHECK(h2.total.diffMatrix(-1).isZero());

    CHECK(homComplex(Complex(A), Complex::single(k)).total.isZero());
}

TEST_CASE("tensorComplex worked examples") {
    auto A = dualNumbers(Q);
    FDModule reg = freeModule(A, 1);
    FDModule k = simpleModule(A);

    TensorComplexData t1 = tensorComplex(Complex::single(reg), xComplex(A));
    for (int i = 0; i <= 1; ++i) CHECK(t1.total.dimAt(i) == xComplex(A).dimAt(i));

    TensorComplexData t2 = tensorComplex(xComplex(A), Complex::single(k));
    CHECK(t2.total.dimAt(0) == 1);
    CHECK(t2.total.dimAt(1) == 1);
    CHECK(t2.total.diffMatrix(0).isZero());

    CHECK(tensorComplex(xComplex(A), Complex(A)).total.isZero());
}

TEST_CASE("dual complex is an involution and flips degrees") {
    auto A = dualNumbers(Q);
    Complex xc = xComplex(A);
    Complex dc = dualComplex(xc);
    CHECK(dc.dimAt(-1) == 2);
    CHECK(dc.dimAt(0) == 2);
    CHECK(dualComplex(dc) == xc);
}

TEST_CASE("Euler characteristic conservation on random complexes") {
    std::mt19937_64 rng(123);
    auto A5 = dualNumbers(F5);
    for (int t = 0; t < 30; ++t) {
        Complex c = randomComplex(A5, rng, 3, 3);
        long long lhs = 0, rhs = 0;
        for (int i = c.minDeg() - 1; i <= c.maxDeg() + 1; ++i) {
            long long sign = ((i % 2) + 2) % 2 == 0 ? 1 : -1;
            lhs += sign * c.dimAt(i);
            rhs += sign * cohomology(c, i).module.dim();
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homotopic maps induce equal maps on cohomology") {
    std::mt19937_64 rng(321);
    auto A5 = dualNumbers(F5);
    int found = 0;
    for (int t = 0; t < 40 && found < 12; ++t) {
        Complex c = randomComplex(A5, rng, 2, 3);
        Complex d = randomComplex(A5, rng, 2, 3);
        auto maps = randomChainMaps(c, d, rng, 2);
        if (maps.size() < 2) continue;
        auto h = findHomotopy(maps[0], maps[1]);
        if (!h) continue;
        ++found;
        for (int i = std::min(c.minDeg(), d.minDeg()); i <= std::max(c.maxDeg(), d.maxDeg()); ++i)
            CHECK(inducedCohomologyMap(maps[0], i).matrix() ==
                  inducedCohomologyMap(maps[1], i).matrix());
    }
    CHECK(found > 0);
}

TEST_CASE("homotopy equivalences are quasi-isomorphisms") {
    // cone(id) → 0 and back: the retraction pair is homotopic to identities
    auto A = dualNumbers(Q);
    Complex xc = xComplex(A);
    ConeData cd = cone(ChainMap::identity(xc));
    Complex zero(A);
    ChainMap to0 = ChainMap::zero(cd.cone, zero);
    ChainMap from0 = ChainMap::zero(zero, cd.cone);
    CHECK(findHomotopy(from0.compose(to0), ChainMap::identity(cd.cone)).has_value());
    CHECK(isQuasiIso(to0));
    CHECK(isQuasiIso(from0));
}
