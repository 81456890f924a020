#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hml/scalar.hpp"

namespace hml {

/// Dense row-major matrix over a single field. Shapes with zero rows or
/// columns are legal and show up constantly (zero modules, empty kernels).
class Mat {
public:
    Mat() : Mat(Field::rationals(), 0, 0) {}
    Mat(Field f, int rows, int cols); // zero matrix

    static Mat identity(Field f, int n);
    static Mat fromRows(Field f, const std::vector<std::vector<Scalar>>& rows);
    /// Test/fixture helper: entries parsed per Scalar::parse.
    static Mat parse(Field f, const std::vector<std::vector<std::string>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return f_; }

    const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool isZero() const;
    bool isIdentity() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;

    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat col(int c) const;
    Mat block(int r0, int c0, int nr, int nc) const;
    void setBlock(int r0, int c0, const Mat& m);

    std::string str() const; // aligned rows, for diagnostics

private:
    int rows_, cols_;
    Field f_;
    std::vector<Scalar> e_;

    void checkSameField(const Mat& o) const;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Kronecker product; pure-tensor index (i,j) of A⊗B flattens to i*B.rows+j.
Mat kron(const Mat& a, const Mat& b);

/// Column vector with a 1 in position i.
Mat unitColumn(Field f, int n, int i);

struct RrefResult {
    Mat reduced;
    std::vector<int> pivots; // strictly increasing column indices
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Unique reduced row-echelon form; leftmost pivots, first nonzero row wins.
RrefResult rref(const Mat& m);

int rankOf(const Mat& m);

/// Columns form the standard non-pivot-column basis of the null space.
Mat kernelBasis(const Mat& m);

/// One particular solution of a·X = b with free variables zeroed, or nothing.
std::optional<Mat> solveLinear(const Mat& a, const Mat& b);

/// solveLinear that must succeed; `what` names the violated invariant.
Mat solveRequired(const Mat& a, const Mat& b, const std::string& what);

/// Basis of the column space: the columns of m at its rref pivot positions.
Mat imageBasis(const Mat& m);

Scalar detOf(const Mat& m);

/// Presentation of k^dim / colspace(s): `project` reduces a vector to the
/// complement coordinates, `section` embeds them back as representatives.
struct QuotientPresentation {
    Mat project;                 // q × dim
    Mat section;                 // dim × q, unit columns
    std::vector<int> complement; // coordinate indices, increasing
};

QuotientPresentation quotientByColumnSpace(const Mat& s, int dim);

} // namespace hml
