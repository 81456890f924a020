#include "hml/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace hml {

IntMat::IntMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpz_class(0)) {
    if (rows < 0 || cols < 0) inputFail("shape-mismatch", "negative matrix dimension");
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::fromRows(const std::vector<std::vector<mpz_class>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(nr, nc);
    for (int r = 0; r < nr; ++r) {
        if (static_cast<int>(rows[r].size()) != nc)
            inputFail("shape-mismatch", "ragged matrix rows");
        for (int c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool IntMat::isZero() const {
    return std::none_of(e_.begin(), e_.end(), [](const mpz_class& v) { return v != 0; });
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) inputFail("shape-mismatch", "IntMat addition");
    IntMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) inputFail("shape-mismatch", "IntMat subtraction");
    IntMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) inputFail("shape-mismatch", "IntMat product");
    IntMat m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

IntMat IntMat::operator-() const {
    IntMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

IntMat IntMat::transpose() const {
    IntMat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Mat IntMat::toRational() const {
    Mat m(Field::rationals(), rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = Scalar::ofRational(mpq_class(at(r, c)));
    return m;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[";
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
        os << "]\n";
    }
    return os.str();
}

IntMat integerKernel(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.cols());
    int c = 0;
    auto swapCols = [&](IntMat& x, int i, int j) {
        for (int r = 0; r < x.rows(); ++r) std::swap(x.at(r, i), x.at(r, j));
    };
    auto addColMultiple = [&](IntMat& x, int dst, int src, const mpz_class& q) {
        for (int r = 0; r < x.rows(); ++r) x.at(r, dst) -= q * x.at(r, src);
    };
    for (int row = 0; row < m.rows() && c < m.cols(); ++row) {
        // reduce row entries right of c to zero, gcd lands in column c
        while (true) {
            int best = -1;
            for (int j = c; j < m.cols(); ++j) {
                if (a.at(row, j) == 0) continue;
                if (best < 0 || cmp(abs(a.at(row, j)), abs(a.at(row, best))) < 0) best = j;
            }
            if (best < 0) break; // row already clear
            if (best != c) { swapCols(a, c, best); swapCols(u, c, best); }
            bool clear = true;
            for (int j = c + 1; j < m.cols(); ++j) {
                if (a.at(row, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(row, j).get_mpz_t(), a.at(row, c).get_mpz_t());
                addColMultiple(a, j, c, q);
                addColMultiple(u, j, c, q);
                if (a.at(row, j) != 0) clear = false;
            }
            if (clear) break;
        }
        if (a.at(row, c) != 0) {
            if (a.at(row, c) < 0) {
                for (int r = 0; r < a.rows(); ++r) a.at(r, c) = -a.at(r, c);
                for (int r = 0; r < u.rows(); ++r) u.at(r, c) = -u.at(r, c);
            }
            ++c;
        }
    }
    // columns c.. of u span the kernel lattice
    IntMat k(m.cols(), m.cols() - c);
    for (int j = c; j < m.cols(); ++j)
        for (int r = 0; r < m.cols(); ++r) k.at(r, j - c) = u.at(r, j);
    return k;
}

mpz_class detOf(const IntMat& m) {
    Scalar d = detOf(m.toRational());
    const mpq_class& q = d.rat();
    if (q.get_den() != 1) inputFail("internal-error", "integer determinant not integral");
    return q.get_num();
}

IntMat toIntegerMat(const Mat& m) {
    if (!m.field().isRational())
        inputFail("mixed-fields", "integer matrix requires rational entries");
    IntMat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m.at(r, c).rat();
            if (q.get_den() != 1)
                inputFail("shape-mismatch", "matrix entry " + q.get_str() + " is not an integer");
            out.at(r, c) = q.get_num();
        }
    return out;
}

} // namespace hml
