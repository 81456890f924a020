#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hml/intmat.hpp"
#include "hml/mat.hpp"

using namespace hml;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

Mat randomMat(Field f, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    Mat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::of(f, d(rng));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic stays reduced") {
    Scalar a = Scalar::parse(Q, "3/6");
    CHECK(a.str() == "1/2");
    CHECK((a + a).str() == "1");
    CHECK((a - a).isZero());
    CHECK((a * Scalar::parse(Q, "-4/3")).str() == "-2/3");
    CHECK(a.inverse().str() == "2");

    Scalar b = Scalar::of(F5, 7);
    CHECK(b.str() == "2");
    CHECK((b * b).str() == "4");
    CHECK(b.inverse().str() == "3"); // 2·3 = 6 ≡ 1
    CHECK_THROWS_AS(a + b, InputError);
}

TEST_CASE("field parsing") {
    CHECK(Field::parse("Q") == Q);
    CHECK(Field::parse("Fp:5") == F5);
    CHECK_THROWS_AS(Field::parse("Fp:6"), InputError);
    CHECK_THROWS_AS(Field::parse("R"), InputError);
}

TEST_CASE("rref matches the worked examples") {
    Mat id2 = Mat::identity(Q, 2);
    auto r = rref(id2);
    CHECK(r.reduced == id2);
    CHECK(r.pivots == std::vector<int>{0, 1});

    Mat m = Mat::parse(Q, {{"1", "2"}, {"2", "4"}});
    auto r2 = rref(m);
    CHECK(r2.reduced == Mat::parse(Q, {{"1", "2"}, {"0", "0"}}));
    CHECK(r2.pivots == std::vector<int>{0});

    Mat z(Q, 3, 2);
    auto r3 = rref(z);
    CHECK(r3.reduced == z);
    CHECK(r3.pivots.empty());
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 40; ++t) {
        Field f = t % 2 ? Q : F5;
        Mat m = randomMat(f, 1 + t % 5, 1 + (t / 2) % 5, rng);
        Mat once = rref(m).reduced;
        CHECK(rref(once).reduced == once);
    }
}

TEST_CASE("kernelBasis examples and rank-nullity") {
    CHECK(kernelBasis(Mat::identity(Q, 2)).cols() == 0);
    CHECK(kernelBasis(Mat(Q, 2, 2)) == Mat::identity(Q, 2));

    Mat m = Mat::parse(Q, {{"1", "2"}, {"2", "4"}});
    Mat k = kernelBasis(m);
    CHECK(k == Mat::parse(Q, {{"-2"}, {"1"}}));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        Field f = t % 2 ? Q : F5;
        Mat a = randomMat(f, 1 + t % 4, 1 + (t / 3) % 5, rng);
        Mat k2 = kernelBasis(a);
        CHECK((a * k2).isZero());
        CHECK(rankOf(a) + k2.cols() == a.cols());
    }
}

TEST_CASE("solveLinear examples and exactness") {
    Mat b = Mat::parse(Q, {{"5"}, {"-7"}});
    CHECK(*solveLinear(Mat::identity(Q, 2), b) == b);

    auto x = solveLinear(Mat::parse(Q, {{"1", "1"}}), Mat::parse(Q, {{"2"}}));
    CHECK(*x == Mat::parse(Q, {{"2"}, {"0"}})); // free variable zeroed

    CHECK(!solveLinear(Mat(Q, 1, 1), Mat::parse(Q, {{"1"}})).has_value());

    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        Field f = t % 2 ? Q : F5;
        Mat a = randomMat(f, 1 + t % 4, 1 + (t / 2) % 4, rng);
        Mat sol = randomMat(f, a.cols(), 2, rng);
        Mat rhs = a * sol;
        auto got = solveLinear(a, rhs);
        REQUIRE(got.has_value());
        CHECK(a * *got == rhs);
    }
}

TEST_CASE("quotient presentation is a retraction killing the subspace") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        Field f = t % 2 ? Q : F5;
        int dim = 2 + t % 4;
        Mat s = randomMat(f, dim, t % 3, rng);
        auto pres = quotientByColumnSpace(s, dim);
        CHECK(pres.project.rows() == dim - rankOf(s));
        CHECK((pres.project * s).isZero());
        CHECK((pres.project * pres.section).isIdentity());
    }
}

TEST_CASE("integerKernel examples") {
    IntMat m1 = IntMat::fromRows({{1, 0}});
    CHECK(integerKernel(m1) == IntMat::fromRows({{0}, {1}}));

    IntMat m2 = IntMat::fromRows({{2, -2}});
    CHECK(integerKernel(m2) == IntMat::fromRows({{1}, {1}}));

    IntMat m3(1, 1);
    CHECK(integerKernel(m3) == IntMat::fromRows({{1}}));
}

TEST_CASE("integerKernel is a primitive basis of the kernel lattice") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 40; ++t) {
        int rows = 1 + t % 3, cols = 1 + (t / 2) % 5;
        IntMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
        IntMat k = integerKernel(m);
        CHECK((m * k).isZero());
        // rank over Q matches the rational kernel
        Mat kq = kernelBasis(m.toRational());
        CHECK(k.cols() == kq.cols());
        // membership: each primitive rational kernel generator is an integer
        // combination of the returned basis
        if (k.cols() > 0) {
            for (int j = 0; j < kq.cols(); ++j) {
                Mat v = kq.col(j);
                mpz_class lcm = 1;
                for (int r = 0; r < v.rows(); ++r)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.at(r, 0).rat().get_den().get_mpz_t());
                Mat vi = v.scaled(Scalar::ofRational(mpq_class(lcm)));
                mpz_class g = 0;
                for (int r = 0; r < vi.rows(); ++r)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vi.at(r, 0).rat().get_num().get_mpz_t());
                if (g != 0) vi = vi.scaled(Scalar::ofRational(mpq_class(1) / mpq_class(g)));
                Mat coeff = solveRequired(k.toRational(), vi, "kernel membership");
                for (int r = 0; r < coeff.rows(); ++r)
                    CHECK(coeff.at(r, 0).rat().get_den() == 1);
            }
        }
    }
}

TEST_CASE("determinant, exact") {
    CHECK(detOf(Mat::identity(Q, 3)).str() == "1");
    Mat m = Mat::parse(Q, {{"0", "1"}, {"1", "0"}});
    CHECK(detOf(m).str() == "-1");
    CHECK(detOf(Mat::parse(Q, {{"2", "1"}, {"4", "2"}})).isZero());
}
