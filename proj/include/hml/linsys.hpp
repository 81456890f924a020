#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hml/mat.hpp"

namespace hml {

/// Linear systems whose unknowns are matrices and whose equations are sums
/// of two-sided products Σ L·X·R = rhs. Used for homotopies, lifts and
/// sampling chain maps. Unknowns are flattened row-major.
class MatrixSystem {
public:
    struct Term {
        int unknown;
        Mat left;
        Mat right;
    };

    explicit MatrixSystem(Field f) : field_(f) {}

    int addUnknown(int rows, int cols);
    void addEquation(const std::vector<Term>& terms, const Mat& rhs);

    /// Particular solution with free variables zeroed, or nothing.
    std::optional<std::vector<Mat>> solve() const;

    /// Particular solution plus a random element of the solution space.
    std::optional<std::vector<Mat>> solvePerturbed(std::mt19937_64& rng) const;

    /// Basis of the homogeneous solution space.
    std::vector<std::vector<Mat>> kernel() const;

private:
    Field field_;
    struct Block {
        int offset, rows, cols;
    };
    std::vector<Block> blocks_;
    int cols_ = 0;
    std::vector<std::pair<std::vector<Term>, Mat>> eqs_;

    Mat assemble(Mat* rhsOut) const; // full coefficient matrix at final width
    std::vector<Mat> unflatten(const Mat& column) const;
};

} // namespace hml
