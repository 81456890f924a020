#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hml/error.hpp"

namespace hml {

/// The ground field: the rationals, or a prime field F_p with p < 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    /// Parses "Q" or "Fp:<p>".
    static Field parse(const std::string& s);

    bool isRational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_; // 0 = rationals
};

/// An exact field element: a reduced rational (positive denominator) or a
/// residue in [0, p). All arithmetic checks field tags and throws
/// MixedFields on disagreement.
class Scalar {
public:
    Scalar() : Scalar(Field::rationals()) {}
    explicit Scalar(Field f);

    static Scalar of(Field f, long n);
    static Scalar ofRational(mpq_class q); // canonicalizes
    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return of(f, 1); }

    /// Parses the serialized form: "p/q" or integer digits.
    static Scalar parse(Field f, const std::string& s);

    Field field() const { return f_; }
    bool isZero() const;
    bool isOne() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Reduced decimal form: "3", "-3/2", or the residue digits.
    std::string str() const;

    const mpq_class& rat() const; // rational fields only
    std::int64_t residue() const; // prime fields only

    /// Sign for rationals (-1, 0, +1); residue==0 test for prime fields.
    int sgn() const;

private:
    Field f_;
    std::variant<mpq_class, std::int64_t> v_;

    void checkSame(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace hml
