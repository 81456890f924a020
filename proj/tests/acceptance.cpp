// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest or directly:
//   acceptance --hml <path-to-hml-binary> --fixtures <fixtures-dir>

#include <array>
#include <chrono>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "../tools/cli.hpp"
#include "hml/derived.hpp"
#include "hml/io.hpp"
#include "hml/k3.hpp"
#include "support.hpp"

using namespace hml;
using namespace hmltest;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds(Clock::time_point from) {
    return std::chrono::duration<double>(Clock::now() - from).count();
}

std::string gHml = "build/tools/hml";
std::string gFixtures = "fixtures";

int runHml(const std::string& args) {
    std::string cmd = gHml + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc < 0) return -1;
    return WEXITSTATUS(rc);
}

std::vector<AlgebraPtr> f5Family() {
    return {Algebra::ground(F5), dualNumbers(F5), truncPoly3(F5), fatPoint(F5),
            productField(F5)};
}

// --- criteria ---

void criterion1() {
    auto t0 = Clock::now();
    auto A = dualNumbers(Q);
    FDModule k = simpleModule(A);
    ExtTable p = ext(k, k, 8, ExtRoute::Projective);
    ExtTable i = ext(k, k, 8, ExtRoute::Injective);
    bool ok = true;
    for (int n = -8; n <= 8; ++n) {
        int expect = n >= 0 ? 1 : 0;
        ok = ok && p.dimAt(n) == expect && i.dimAt(n) == expect;
    }
    double dt = seconds(t0);
    ok = ok && dt < 1.0;
    std::ostringstream d;
    d << "both routes, " << dt << " s";
    report(1, "periodic Ext(k,k) over k[x]/(x²) = 1 in degrees 0..8", ok, d.str());
}

void criterion2() {
    auto A = dualNumbers(Q);
    FDModule k = simpleModule(A);
    ExtTable t = tor(k, k, 8);
    bool ok = true;
    for (int n = 0; n <= 8; ++n) ok = ok && t.dimAt(n) == 1;
    ok = ok && t.dimAt(0) == tensorModule(k, k).module.dim();
    report(2, "periodic Tor(k,k) over k[x]/(x²) = 1 in degrees 0..8", ok);
}

void criterion3() {
    std::mt19937_64 rng(303);
    auto gk = Algebra::ground(Q);
    std::uniform_int_distribution<int> dim(0, 4);
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
        FDModule m = freeModule(gk, dim(rng));
        FDModule n = freeModule(gk, dim(rng));
        ExtTable e = ext(m, n, 3);
        ExtTable to = tor(m, n, 3);
        ok = ok && e.dimAt(0) == m.dim() * n.dim() && to.dimAt(0) == m.dim() * n.dim();
        for (int i = 1; i <= 3; ++i) ok = ok && e.dimAt(i) == 0 && to.dimAt(i) == 0;
    }
    report(3, "semisimple vanishing of Ext/Tor on 50 random pairs", ok);
}

void criterion4() {
    std::mt19937_64 rng(404);
    auto g5 = Algebra::ground(F5);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
        Complex c = randomComplex(g5, rng, 3, 4);
        ConeData cd = cone(ChainMap::identity(c));
        ok = ok && nullHomotopic(ChainMap::identity(cd.cone));
    }
    report(4, "TR1: cone(id) null-homotopic on 100 random F5 complexes", ok);
}

void criterion5() {
    std::mt19937_64 rng(505);
    std::vector<AlgebraPtr> algebras = f5Family();
    algebras.push_back(dualNumbers(Q));
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        RandomSES ses = randomSES(a, rng, 3);
        SesToTriangle st = sesToTriangleCheck(ses.inc, ses.prj);
        ok = ok && st.verdict.ok;
        LESReport les = cohomologyLES(cone(ChainMap::single(ses.inc)).triangle);
        ok = ok && les.verdict.ok;
    }
    report(5, "SES→triangle and exact LES on 100 random short exact sequences", ok);
}

void criterion6() {
    std::mt19937_64 rng(606);
    std::vector<AlgebraPtr> algebras = f5Family();
    bool ok = true;
    std::string what;

    for (int t = 0; t < 100 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        Complex c = randomComplex(a, rng, 3, 2);
        Complex d = randomComplex(a, rng, 3, 2);
        ChainMap f = randomChainMaps(c, d, rng, 1)[0];
        if (!tr2Rotate(cone(f).triangle).ok) {
            ok = false;
            what = "tr2 instance " + std::to_string(t);
        }
    }
    for (int t = 0; t < 100 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        Complex c = randomComplex(a, rng, 2, 2);
        Complex d = randomComplex(a, rng, 2, 2);
        Complex dp = randomComplex(a, rng, 2, 2);
        Complex junk = randomComplex(a, rng, 2, 1);
        ChainMap f = randomChainMaps(c, d, rng, 1)[0];
        ChainMap b = randomChainMaps(d, dp, rng, 1)[0];
        ComplexSum cs = directSumComplex(c, junk);
        // f′ agrees with b∘f on the summand and vanishes on the junk
        std::map<int, Mat> comps;
        ChainMap bf = b.compose(f);
        for (int i = cs.sum.minDeg(); i <= cs.sum.maxDeg(); ++i) {
            if (cs.sum.dimAt(i) == 0 || dp.dimAt(i) == 0) continue;
            Mat m(a->field(), dp.dimAt(i), cs.sum.dimAt(i));
            m.setBlock(0, 0, bf.component(i));
            comps.emplace(i, std::move(m));
        }
        ChainMap fp = perturbByHomotopy(ChainMap(cs.sum, dp, std::move(comps)), rng);
        try {
            tr3Complete(cs.includeFirst, b, f, fp);
        } catch (const Error& e) {
            ok = false;
            what = std::string("tr3 instance ") + std::to_string(t) + ": " + e.what();
        }
    }
    for (int t = 0; t < 100 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        Complex c = randomComplex(a, rng, 2, 2);
        Complex d = randomComplex(a, rng, 2, 2);
        Complex e = randomComplex(a, rng, 2, 2);
        ChainMap f = randomChainMaps(c, d, rng, 1)[0];
        ChainMap g = randomChainMaps(d, e, rng, 1)[0];
        if (!octahedron(f, g).verdict.ok) {
            ok = false;
            what = "octahedron instance " + std::to_string(t);
        }
    }
    for (int t = 0; t < 100 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        FDModule m = randomModuleCapped(a, rng, 3);
        FDModule n = randomModuleCapped(a, rng, 3);
        FDModule p = randomModuleCapped(a, rng, 3);
        WindmillReport w = windmillCheck(randomModuleMap(m, n, rng), randomModuleMap(n, p, rng));
        if (!w.verdict.ok) {
            ok = false;
            what = "windmill instance " + std::to_string(t);
        }
    }
    // windmill worked examples
    auto gk = Algebra::ground(Q);
    FDModule k1 = freeModule(gk, 1), k2 = freeModule(gk, 2);
    WindmillReport w1 = windmillCheck(ModuleMap::identity(k1), ModuleMap::identity(k1));
    WindmillReport w2 = windmillCheck(ModuleMap::zero(k1, k1), ModuleMap::zero(k1, k1));
    WindmillReport w3 = windmillCheck(ModuleMap(k1, k2, Mat::parse(Q, {{"1"}, {"0"}})),
                                      ModuleMap(k2, k1, Mat::parse(Q, {{"0", "1"}})));
    bool worked = w1.verdict.ok && w1.dims == std::vector<int>{0, 0, 0, 0, 0, 0} &&
                  w2.verdict.ok && w2.dims == std::vector<int>{1, 1, 1, 1, 1, 1} &&
                  w3.verdict.ok && w3.dims == std::vector<int>{0, 1, 1, 1, 1, 0};
    ok = ok && worked;
    report(6, "TR2/TR3/octahedron/windmill on 100 random instances each", ok, what);
}

void criterion7() {
    std::mt19937_64 rng(707);
    auto A = dualNumbers(Q);
    auto gk = Algebra::ground(Q);
    AlgebraMap phi(A, gk, Mat::parse(Q, {{"1", "0"}}));
    bool ok = true;
    std::string what;

    // shipped fixture instances
    ok = ok && adjunctionCheck(phi, freeModule(A, 1), freeModule(gk, 1), 4).ok;
    ok = ok && adjunctionCheck(phi, simpleModule(A), freeModule(gk, 1), 4).ok;
    ok = ok && projectionFormulaCheck(phi, Complex::single(freeModule(gk, 1)),
                                      Complex::single(simpleModule(A)), 3)
                   .ok;
    AlgebraPtr prod = productAlgebra(A, A);
    AlgebraMap diag = diagonalMap(A, prod);
    ok = ok && flatBaseChangeCheck(phi, AlgebraMap::identity(A), freeModule(gk, 1), 3).ok;
    ok = ok && flatBaseChangeCheck(AlgebraMap::identity(A), diag, freeModule(A, 1), 3).ok;
    // non-flat leg must be detected, not silently compared
    Verdict notFlat = flatBaseChangeCheck(AlgebraMap::identity(A), phi, freeModule(A, 1), 3);
    ok = ok && !notFlat.ok && notFlat.failures[0].spot == "flatness";
    if (!ok) what = "fixture instances";

    for (int t = 0; t < 10 && ok; ++t) {
        FDModule m = randomModuleCapped(A, rng, 3);
        FDModule n = freeModule(gk, static_cast<int>(rng() % 3));
        if (!adjunctionCheck(phi, m, n, 3).ok) {
            ok = false;
            what = "adjunction instance " + std::to_string(t);
        }
    }
    for (int t = 0; t < 8 && ok; ++t) {
        Complex e = randomComplex(gk, rng, 2, 2);
        Complex f = randomComplex(A, rng, 2, 2);
        if (!projectionFormulaCheck(phi, e, f, 2).ok) {
            ok = false;
            what = "projection instance " + std::to_string(t);
        }
    }
    for (int t = 0; t < 7 && ok; ++t) {
        FDModule m = randomModuleCapped(A, rng, 3);
        if (!flatBaseChangeCheck(AlgebraMap::identity(A), diag, m, 2).ok) {
            ok = false;
            what = "base-change instance " + std::to_string(t);
        }
    }
    report(7, "adjunction, projection formula, flat base change (fixtures + 25 random)", ok,
           what);
}

void criterion8() {
    std::mt19937_64 rng(808);
    std::vector<AlgebraPtr> algebras = f5Family();
    algebras.push_back(dualNumbers(Q));
    bool ok = true;
    for (int t = 0; t < 50 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        FDModule m = randomModuleCapped(a, rng, 3);
        FDModule n = randomModuleCapped(a, rng, 3);
        ModuleMap f = randomModuleMap(m, n, rng);
        bool inj = t % 3 == 2;
        CoverStrategy cs = t % 2 == 0 ? CoverStrategy::Greedy : CoverStrategy::FullBasis;
        Resolution rm = inj ? injectiveResolution(m, 3) : freeResolution(m, 3);
        Resolution rn = inj ? injectiveResolution(n, 3, cs) : freeResolution(n, 3, cs);
        ChainMap l1 = liftMap(f, rm, rn, rng());
        ChainMap l2 = liftMap(f, rm, rn, rng());
        ok = ok && findHomotopy(l1, l2).has_value();
    }
    report(8, "lift uniqueness up to homotopy on 50 random module maps", ok);
}

void criterion9() {
    ExtendedLattice l(EvenLattice::minusTwo());
    MukaiElement vO = mukaiVector(l, 1, {0}, 0);
    bool ok = mukaiPairing(l, vO, vO) == -2 && eulerChiLattice(l, vO, vO) == 2;

    ExtendedLattice lc(EvenLattice::fromGram(IntMat::fromRows({{-2, 1}, {1, -2}})));
    MukaiElement v{0, {1, 0}, 1}, w{0, {0, 1}, 1};
    ok = ok && mukaiPairing(lc, v, w) == 1 && eulerChiLattice(lc, v, w) == -1;
    report(9, "Mukai arithmetic: ⟨v(O),v(O)⟩ = −2, intro example χ = −C′·C = −1", ok);
}

void criterion10() {
    std::mt19937_64 rng(1010);
    EvenLattice h2 = EvenLattice::fromGram(
        IntMat::fromRows({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, -2}}));
    ExtendedLattice l(h2);
    std::uniform_int_distribution<int> d(-2, 2);

    // ten Pythagorean (ample, σ) pairs: re = (a,b,0,0), im = (0,0,c,0),
    // ample = (b,−a,0,0) with a² + b² = c²
    std::vector<std::array<long, 3>> triples{{3, 4, 5},   {6, 8, 10},  {5, 12, 13},
                                             {9, 12, 15}, {8, 15, 17}, {20, 21, 29},
                                             {7, 24, 25}, {12, 16, 20}, {28, 45, 53},
                                             {11, 60, 61}};
    std::vector<std::pair<std::vector<mpz_class>, HodgePeriod>> frames;
    for (const auto& [a, b, c] : triples) {
        std::vector<mpq_class> re{a, b, 0, 0}, im{0, 0, c, 0};
        frames.emplace_back(std::vector<mpz_class>{b, -a, 0, 0},
                            HodgePeriod::make(h2, re, im));
    }

    bool ok = true;
    int found = 0;
    while (found < 20 && ok) {
        MukaiElement v{d(rng), {d(rng), d(rng), d(rng), d(rng)}, d(rng)};
        if (mukaiPairing(l, v, v) != -2) continue;
        ++found;
        LatticeIsometry t = reflectionTwist(l, v);
        ok = ok && isIsometry(l, t.matrix);
        ok = ok && t.matrix * t.matrix == IntMat::identity(l.rank());
        Mat vcol = elementColumn(l, v);
        ok = ok && toIntegerMat(t.matrix.toRational() * vcol) == -toIntegerMat(vcol);
        ok = ok && rankOf((t.matrix - IntMat::identity(l.rank())).toRational()) == 1;
        for (const auto& [ample, sigma] : frames)
            ok = ok && orientationCheck(l, t.matrix, ample, sigma) == Orientation::Preserves;
    }
    LatticeIsometry flip = extendByH2Sign(l, -1);
    for (const auto& [ample, sigma] : frames)
        ok = ok && orientationCheck(l, flip.matrix, ample, sigma) == Orientation::Reverses;
    report(10, "twist suite: 20 random (−2)-reflections, orientation on 10 frames", ok);
}

void criterion11() {
    bool ok = true;
    for (const EvenLattice& h2 : {EvenLattice::minusTwo(), EvenLattice::hyperbolicU()}) {
        ExtendedLattice l(h2);
        Mat diag = diagonalKernel(l);
        for (int i = 0; i < l.rank(); ++i) {
            Mat e = Mat::identity(Field::rationals(), l.rank()).col(i);
            MukaiElementQ out = cohomFM(l, l, diag, elementFromColumn(l, e));
            ok = ok && elementColumn(l, out) == e;
        }
    }
    report(11, "diagonal kernel acts as the identity on A1(−2) and U extensions", ok);
}

void criterion12() {
    std::mt19937_64 rng(1212);
    std::vector<AlgebraPtr> algebras{Algebra::ground(F5), dualNumbers(F5), dualNumbers(Q),
                                     truncPoly3(F5)};
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
        const AlgebraPtr& a = algebras[static_cast<size_t>(t) % algebras.size()];
        Complex c = randomComplex(a, rng, 3, 4);
        long long lhs = 0, rhs = 0;
        for (int i = c.minDeg() - 1; i <= c.maxDeg() + 1; ++i) {
            long long sign = ((i % 2) + 2) % 2 == 0 ? 1 : -1;
            lhs += sign * c.dimAt(i);
            rhs += sign * cohomology(c, i).module.dim();
        }
        ok = ok && lhs == rhs;
    }
    report(12, "Euler characteristic conservation on 200 random complexes", ok);
}

void criterion13() {
    namespace fs = std::filesystem;
    bool ok = true;
    std::string what;

    // byte-identical round trip for every shipped fixture
    Workspace ws(Q);
    std::vector<std::pair<std::string, std::string>> files; // name → original bytes
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(gFixtures)) {
        if (!entry.is_regular_file()) continue;
        paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    try {
        for (const auto& p : paths) {
            std::ifstream in(p);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string name = ws.addFile(p);
            files.emplace_back(name, buf.str());
        }
        ws.finalize();
        for (const auto& [name, bytes] : files) {
            if (dumpJson(ws.serialize(name)) != bytes) {
                ok = false;
                what = "round trip differs for '" + name + "'";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        what = e.what();
    }

    // exit-code contract
    auto expectExit = [&](const std::string& args, int expected, const std::string& label) {
        int rc = runHml(args);
        if (rc != expected) {
            ok = false;
            what = label + " gave exit " + std::to_string(rc) + ", expected " +
                   std::to_string(expected);
        }
    };
    std::string fx = gFixtures;
    expectExit("ext --algebra " + fx + "/dual.json --m " + fx + "/k.json --n " + fx +
                   "/k.json --max-degree 4",
               0, "ok command");
    expectExit("cohomology --complex " + fx + "/malformed/bad-syntax.json", 2, "bad syntax");
    expectExit("cohomology --complex " + fx + "/malformed/bad-module.json", 2, "bad module");
    expectExit("k3 pair --h2 " + fx + "/malformed/dup-a.json --load " + fx +
                   "/malformed/dup-b.json --v \"0,(0),0\" --w \"0,(0),0\"",
               2, "duplicate names");
    expectExit("check les --triangle " + fx + "/zero-triangle.json", 1, "violation");
    expectExit("chi --algebra " + fx + "/dual.json --m " + fx + "/k.json --n " + fx +
                   "/k.json --bound 6",
               3, "non-convergent");
    report(13, "CLI round trip and exit-code contract", ok, what);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        std::string a = argv[i];
        if (a == "--hml") gHml = argv[i + 1];
        if (a == "--fixtures") gFixtures = argv[i + 1];
    }
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << seconds(t0) << " s total)" << std::endl;
    return failures == 0 ? 0 : 1;
}
