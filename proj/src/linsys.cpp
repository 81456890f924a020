#include "hml/linsys.hpp"

namespace hml {

int MatrixSystem::addUnknown(int rows, int cols) {
    blocks_.push_back({cols_, rows, cols});
    cols_ += rows * cols;
    return static_cast<int>(blocks_.size()) - 1;
}

void MatrixSystem::addEquation(const std::vector<Term>& terms, const Mat& rhs) {
    eqs_.push_back({terms, rhs});
}

Mat MatrixSystem::assemble(Mat* rhsOut) const {
    int eqRows = 0;
    for (const auto& [terms, rhs] : eqs_) eqRows += rhs.rows() * rhs.cols();
    Mat sys(field_, eqRows, cols_);
    Mat rv(field_, eqRows, 1);
    int base = 0;
    for (const auto& [terms, rhs] : eqs_) {
        for (const Term& t : terms) {
            const Block& b = blocks_[t.unknown];
            // (L·X·R)[r][c] picks up L[r][r']·R[c'][c] from X[r'][c']
            for (int r = 0; r < rhs.rows(); ++r)
                for (int c = 0; c < rhs.cols(); ++c) {
                    int eq = base + r * rhs.cols() + c;
                    for (int rp = 0; rp < b.rows; ++rp) {
                        const Scalar& l = t.left.at(r, rp);
                        if (l.isZero()) continue;
                        for (int cp = 0; cp < b.cols; ++cp) {
                            const Scalar& rr = t.right.at(cp, c);
                            if (rr.isZero()) continue;
                            sys.at(eq, b.offset + rp * b.cols + cp) += l * rr;
                        }
                    }
                }
        }
        for (int r = 0; r < rhs.rows(); ++r)
            for (int c = 0; c < rhs.cols(); ++c)
                rv.at(base + r * rhs.cols() + c, 0) = rhs.at(r, c);
        base += rhs.rows() * rhs.cols();
    }
    if (rhsOut) *rhsOut = std::move(rv);
    return sys;
}

std::vector<Mat> MatrixSystem::unflatten(const Mat& column) const {
    std::vector<Mat> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) {
        Mat m(field_, b.rows, b.cols);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) m.at(r, c) = column.at(b.offset + r * b.cols + c, 0);
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<std::vector<Mat>> MatrixSystem::solve() const {
    Mat rhs(field_, 0, 1);
    Mat sys = assemble(&rhs);
    auto sol = solveLinear(sys, rhs);
    if (!sol) return std::nullopt;
    return unflatten(*sol);
}

std::vector<std::vector<Mat>> MatrixSystem::kernel() const {
    Mat sys = assemble(nullptr);
    Mat k = kernelBasis(sys);
    std::vector<std::vector<Mat>> out;
    out.reserve(k.cols());
    for (int j = 0; j < k.cols(); ++j) out.push_back(unflatten(k.col(j)));
    return out;
}

std::optional<std::vector<Mat>> MatrixSystem::solvePerturbed(std::mt19937_64& rng) const {
    auto base = solve();
    if (!base) return std::nullopt;
    auto null = kernel();
    if (!null.empty()) {
        std::uniform_int_distribution<int> d(-2, 2);
        for (auto& basisElt : null) {
            Scalar coeff = Scalar::of(field_, d(rng));
            if (coeff.isZero()) continue;
            for (size_t b = 0; b < base->size(); ++b)
                (*base)[b] = (*base)[b] + basisElt[b].scaled(coeff);
        }
    }
    return base;
}

} // namespace hml
