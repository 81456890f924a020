#include "hml/mat.hpp"

#include <algorithm>
#include <sstream>

namespace hml {

Mat::Mat(Field f, int rows, int cols)
    : rows_(rows), cols_(cols), f_(f),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) inputFail("shape-mismatch", "negative matrix dimension");
}

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::fromRows(Field f, const std::vector<std::vector<Scalar>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(f, nr, nc);
    for (int r = 0; r < nr; ++r) {
        if (static_cast<int>(rows[r].size()) != nc)
            inputFail("shape-mismatch", "ragged matrix rows");
        for (int c = 0; c < nc; ++c) {
            if (!(rows[r][c].field() == f))
                inputFail("mixed-fields", "matrix entry field differs from matrix field");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

Mat Mat::parse(Field f, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const auto& s : row) r.push_back(Scalar::parse(f, s));
        out.push_back(std::move(r));
    }
    return fromRows(f, out);
}

bool Mat::isZero() const {
    return std::none_of(e_.begin(), e_.end(), [](const Scalar& s) { return !s.isZero(); });
}

bool Mat::isIdentity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r == c ? !at(r, c).isOne() : !at(r, c).isZero()) return false;
    return true;
}

void Mat::checkSameField(const Mat& o) const {
    if (!(f_ == o.f_))
        inputFail("mixed-fields", "matrices over " + f_.name() + " and " + o.f_.name() + " mixed");
}

Mat Mat::operator+(const Mat& o) const {
    checkSameField(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        inputFail("shape-mismatch", "matrix addition shape mismatch");
    Mat m(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    checkSameField(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        inputFail("shape-mismatch", "matrix subtraction shape mismatch");
    Mat m(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    checkSameField(o);
    if (cols_ != o.rows_)
        inputFail("shape-mismatch", "matrix product shape mismatch: " + std::to_string(cols_) +
                                        " vs " + std::to_string(o.rows_));
    Mat m(f_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.isZero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.at(k, c);
                if (!b.isZero()) m.at(r, c) += a * b;
            }
        }
    return m;
}

Mat Mat::operator-() const {
    Mat m(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m(f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Mat Mat::col(int c) const { return block(0, c, rows_, 1); }

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat m(f_, nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

void Mat::setBlock(int r0, int c0, const Mat& m) {
    checkSameField(m);
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c) at(r0 + r, c0 + c) = m.at(r, c);
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[";
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
        os << "]\n";
    }
    return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) inputFail("shape-mismatch", "hstack row mismatch");
    Mat m(a.field(), a.rows(), a.cols() + b.cols());
    m.setBlock(0, 0, a);
    m.setBlock(0, a.cols(), b);
    return m;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) inputFail("shape-mismatch", "vstack column mismatch");
    Mat m(a.field(), a.rows() + b.rows(), a.cols());
    m.setBlock(0, 0, a);
    m.setBlock(a.rows(), 0, b);
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& s = a.at(i, j);
            if (s.isZero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = s * b.at(k, l);
        }
    return m;
}

Mat unitColumn(Field f, int n, int i) {
    Mat m(f, n, 1);
    m.at(i, 0) = Scalar::one(f);
    return m;
}

RrefResult rref(const Mat& m) {
    RrefResult res{m, {}};
    Mat& a = res.reduced;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!a.at(r, col).isZero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
        Scalar inv = a.at(row, col).inverse();
        for (int c = col; c < a.cols(); ++c) a.at(row, c) = a.at(row, c) * inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).isZero()) continue;
            Scalar factor = a.at(r, col);
            for (int c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

int rankOf(const Mat& m) { return rref(m).rank(); }

Mat kernelBasis(const Mat& m) {
    RrefResult r = rref(m);
    std::vector<int> free;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (pi < r.pivots.size() && r.pivots[pi] == c) { ++pi; continue; }
            free.push_back(c);
        }
    }
    Mat k(m.field(), m.cols(), static_cast<int>(free.size()));
    for (size_t j = 0; j < free.size(); ++j) {
        k.at(free[j], static_cast<int>(j)) = Scalar::one(m.field());
        for (size_t i = 0; i < r.pivots.size(); ++i)
            k.at(r.pivots[i], static_cast<int>(j)) = -r.reduced.at(static_cast<int>(i), free[j]);
    }
    return k;
}

std::optional<Mat> solveLinear(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        inputFail("shape-mismatch", "solveLinear: a.rows != b.rows");
    RrefResult r = rref(hstack(a, b));
    // a pivot inside the augmented block means an inconsistent column
    for (int p : r.pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat x(a.field(), a.cols(), b.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (int c = 0; c < b.cols(); ++c)
            x.at(r.pivots[i], c) = r.reduced.at(static_cast<int>(i), a.cols() + c);
    return x;
}

Mat solveRequired(const Mat& a, const Mat& b, const std::string& what) {
    auto x = solveLinear(a, b);
    if (!x) inputFail("internal-error", "unsolvable system: " + what);
    return *x;
}

Mat imageBasis(const Mat& m) {
    RrefResult r = rref(m);
    Mat b(m.field(), m.rows(), r.rank());
    for (int j = 0; j < r.rank(); ++j)
        b.setBlock(0, j, m.col(r.pivots[j]));
    return b;
}

Scalar detOf(const Mat& m) {
    if (m.rows() != m.cols()) inputFail("shape-mismatch", "determinant of non-square matrix");
    Mat a = m;
    Scalar det = Scalar::one(m.field());
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).isZero()) { piv = r; break; }
        if (piv < 0) return Scalar::zero(m.field());
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det = det * a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).isZero()) continue;
            Scalar factor = a.at(r, col) * inv;
            for (int c = col; c < n; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
        }
    }
    return det;
}

QuotientPresentation quotientByColumnSpace(const Mat& s, int dim) {
    if (s.rows() != dim) inputFail("shape-mismatch", "quotient: subspace basis has wrong ambient dimension");
    RrefResult r = rref(s.transpose());
    // the rref rows span the subspace; standard basis vectors at non-pivot
    // coordinates form a complement
    std::vector<int> complement;
    {
        size_t pi = 0;
        for (int c = 0; c < dim; ++c) {
            if (pi < r.pivots.size() && r.pivots[pi] == c) { ++pi; continue; }
            complement.push_back(c);
        }
    }
    int q = static_cast<int>(complement.size());
    Field f = s.field();
    QuotientPresentation pres{Mat(f, q, dim), Mat(f, dim, q), complement};
    for (int j = 0; j < q; ++j) {
        pres.section.at(complement[j], j) = Scalar::one(f);
        pres.project.at(j, complement[j]) = Scalar::one(f);
        for (size_t i = 0; i < r.pivots.size(); ++i)
            pres.project.at(j, r.pivots[i]) = -r.reduced.at(static_cast<int>(i), complement[j]);
    }
    return pres;
}

} // namespace hml
