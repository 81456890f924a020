#include "hml/scalar.hpp"

#include <ostream>

namespace hml {

namespace {

bool isPrimeU32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t modReduce(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// inverse of a mod p via extended Euclid; a in [1, p)
std::int64_t modInverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newT = 1, r = p, newR = a;
    while (newR != 0) {
        std::int64_t q = r / newR;
        t = std::exchange(newT, t - q * newT);
        r = std::exchange(newR, r - q * newR);
    }
    if (r != 1) inputFail("division-by-zero", "element has no inverse mod p");
    return modReduce(t, p);
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !isPrimeU32(p))
        inputFail("bad-field", "prime field characteristic must be a prime < 2^31, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(s.substr(3));
            return prime(static_cast<std::uint32_t>(p));
        } catch (const std::logic_error&) {
            inputFail("bad-field", "cannot parse field '" + s + "'");
        }
    }
    inputFail("bad-field", "cannot parse field '" + s + "' (expected \"Q\" or \"Fp:<p>\")");
}

std::string Field::name() const {
    return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(Field f) : f_(f) {
    if (f.isRational())
        v_ = mpq_class(0);
    else
        v_ = std::int64_t{0};
}

Scalar Scalar::of(Field f, long n) {
    Scalar s(f);
    if (f.isRational())
        s.v_ = mpq_class(n);
    else
        s.v_ = modReduce(n, f.characteristic());
    return s;
}

Scalar Scalar::ofRational(mpq_class q) {
    q.canonicalize();
    Scalar s(Field::rationals());
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::parse(Field f, const std::string& s) {
    try {
        if (f.isRational()) {
            mpq_class q(s);
            q.canonicalize();
            Scalar out(f);
            out.v_ = std::move(q);
            return out;
        }
        mpz_class z(s);
        mpz_class r = z % static_cast<unsigned long>(f.characteristic());
        Scalar out(f);
        out.v_ = modReduce(r.get_si(), f.characteristic());
        return out;
    } catch (const std::invalid_argument&) {
        inputFail("bad-scalar", "cannot parse scalar '" + s + "' over " + f.name());
    }
}

bool Scalar::isZero() const {
    return f_.isRational() ? std::get<mpq_class>(v_) == 0 : std::get<std::int64_t>(v_) == 0;
}

bool Scalar::isOne() const {
    return f_.isRational() ? std::get<mpq_class>(v_) == 1 : std::get<std::int64_t>(v_) == 1;
}

void Scalar::checkSame(const Scalar& o) const {
    if (!(f_ == o.f_))
        inputFail("mixed-fields", "scalars over " + f_.name() + " and " + o.f_.name() + " mixed");
}

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_.isRational())
        s.v_ = mpq_class(-std::get<mpq_class>(v_));
    else
        s.v_ = modReduce(-std::get<std::int64_t>(v_), f_.characteristic());
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    checkSame(o);
    Scalar s(f_);
    if (f_.isRational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    else
        s.v_ = modReduce(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), f_.characteristic());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    checkSame(o);
    Scalar s(f_);
    if (f_.isRational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
    else
        s.v_ = modReduce(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), f_.characteristic());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    checkSame(o);
    Scalar s(f_);
    if (f_.isRational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    else
        s.v_ = modReduce(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), f_.characteristic());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (isZero()) inputFail("division-by-zero", "inverse of zero");
    Scalar s(f_);
    if (f_.isRational())
        s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    else
        s.v_ = modInverse(std::get<std::int64_t>(v_), f_.characteristic());
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.f_ == b.f_)) return false;
    if (a.f_.isRational())
        return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return std::get<std::int64_t>(a.v_) == std::get<std::int64_t>(b.v_);
}

std::string Scalar::str() const {
    if (f_.isRational())
        return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::int64_t>(v_));
}

const mpq_class& Scalar::rat() const {
    if (!f_.isRational()) inputFail("mixed-fields", "rat() on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

std::int64_t Scalar::residue() const {
    if (f_.isRational()) inputFail("mixed-fields", "residue() on a rational scalar");
    return std::get<std::int64_t>(v_);
}

int Scalar::sgn() const {
    if (f_.isRational()) return ::sgn(std::get<mpq_class>(v_));
    return std::get<std::int64_t>(v_) == 0 ? 0 : 1;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace hml
