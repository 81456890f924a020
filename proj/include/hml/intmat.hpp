#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "hml/mat.hpp"

namespace hml {

/// Dense integer matrix (arbitrary precision), the substrate for lattices.
class IntMat {
public:
    IntMat() : IntMat(0, 0) {}
    IntMat(int rows, int cols);

    static IntMat identity(int n);
    static IntMat fromRows(const std::vector<std::vector<mpz_class>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const mpz_class& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    mpz_class& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool isZero() const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator-() const;
    IntMat transpose() const;

    friend bool operator==(const IntMat& a, const IntMat& b);
    friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

    Mat toRational() const;
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

/// Columns form a Z-basis of {x : m·x = 0}, by column elimination with a
/// unimodular transform (Hermite-style); deterministic.
IntMat integerKernel(const IntMat& m);

mpz_class detOf(const IntMat& m);

/// Fails unless every entry of m is an integer.
IntMat toIntegerMat(const Mat& m);

} // namespace hml
