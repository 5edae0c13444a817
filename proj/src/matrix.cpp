#include "qlab/matrix.hpp"

#include "qlab/errors.hpp"

#include <sstream>
#include <utility>

namespace qlab {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
    return scalar(n, Scalar(1));
}

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
    Matrix m(n, n);
    if (!s.is_zero())
        for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = s;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionError("matrix dimensions must be positive");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.raw(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.raw(i, 0) = v[i];
    return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    return data_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    return data_[r * cols_ + c];
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& x = raw(r, c);
            if (r == c ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

std::size_t Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_)
        if (!x.is_zero()) ++n;
    return n;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!raw(r, c).is_zero()) t.raw(c, r) = raw(r, c);
    return t;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
    Scalar s;
    for (std::size_t i = 0; i < rows_; ++i) s += raw(i, i);
    return s;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b.raw(r, c) = raw(r0 + r, c0 + c);
    return b;
}

Matrix Matrix::map(Scalar (*f)(const Scalar&)) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = f(x);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    if (s.is_one()) return *this;
    for (auto& x : data_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    // operators here are mostly sparse, so walk nonzeros of b row by row
    std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> bnz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!b.raw(k, j).is_zero()) bnz[k].emplace_back(j, &b.raw(k, j));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.raw(i, k);
            if (x.is_zero()) continue;
            for (const auto& [j, y] : bnz[k]) c.raw(i, j) += x * *y;
        }
    }
    return c;
}

std::string Matrix::first_nonzero() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!raw(r, c).is_zero()) {
                std::ostringstream os;
                os << "(" << r << ", " << c << "): " << raw(r, c).str();
                return os.str();
            }
    return {};
}

std::size_t TensorLayout::size() const {
    std::size_t n = 1;
    for (auto d : factor_dims) n *= d;
    return n;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.raw(i, j);
            if (x.is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    const Scalar& y = b.raw(r, c);
                    if (!y.is_zero()) k.raw(i * b.rows() + r, j * b.cols() + c) = x * y;
                }
        }
    return k;
}

Matrix kronecker(const std::vector<Matrix>& factors) {
    if (factors.empty()) throw DimensionError("empty Kronecker product");
    Matrix k = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) k = kronecker(k, factors[i]);
    return k;
}

Matrix place_operator(const Matrix& op, std::size_t pos, const TensorLayout& layout) {
    const auto& d = layout.factor_dims;
    if (pos < 1 || pos + 1 > d.size()) throw DimensionError("operator position outside layout");
    std::size_t local = d[pos - 1] * d[pos];
    if (op.rows() != local || op.cols() != local)
        throw DimensionError("operator does not match factors " + std::to_string(pos) + "," + std::to_string(pos + 1));
    std::size_t left = 1, right = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) left *= d[i];
    for (std::size_t i = pos + 1; i < d.size(); ++i) right *= d[i];
    std::size_t n = left * local * right;
    Matrix m(n, n);
    for (std::size_t r = 0; r < local; ++r)
        for (std::size_t c = 0; c < local; ++c) {
            const Scalar& x = op.raw(r, c);
            if (x.is_zero()) continue;
            for (std::size_t a = 0; a < left; ++a)
                for (std::size_t b = 0; b < right; ++b)
                    m.raw((a * local + r) * right + b, (a * local + c) * right + b) = x;
        }
    return m;
}

Matrix partial_trace(const Matrix& m, const TensorLayout& layout, std::size_t factor) {
    const auto& d = layout.factor_dims;
    if (factor < 1 || factor > d.size()) throw DimensionError("partial trace factor outside layout");
    if (d.size() < 2) throw DimensionError("partial trace needs at least two factors");
    std::size_t n = layout.size();
    if (m.rows() != n || m.cols() != n) throw DimensionError("matrix does not match layout");
    std::size_t left = 1, right = 1, mid = d[factor - 1];
    for (std::size_t i = 0; i + 1 < factor; ++i) left *= d[i];
    for (std::size_t i = factor; i < d.size(); ++i) right *= d[i];
    std::size_t out = left * right;
    Matrix t(out, out);
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = 0; b < right; ++b)
            for (std::size_t a2 = 0; a2 < left; ++a2)
                for (std::size_t b2 = 0; b2 < right; ++b2) {
                    Scalar s;
                    for (std::size_t k = 0; k < mid; ++k) {
                        const Scalar& x = m.raw((a * mid + k) * right + b, (a2 * mid + k) * right + b2);
                        if (!x.is_zero()) s += x;
                    }
                    if (!s.is_zero()) t.raw(a * right + b, a2 * right + b2) = s;
                }
    return t;
}

Matrix swap_operator(std::size_t a, std::size_t b) {
    Matrix p(a * b, a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) p.raw(j * a + i, i * b + j) = Scalar(1);
    return p;
}

std::string difference(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return "shape mismatch";
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c)
            if (!(lhs.raw(r, c) == rhs.raw(r, c))) {
                std::ostringstream os;
                os << "entry (" << r << ", " << c << "): " << lhs.raw(r, c).str() << " vs " << rhs.raw(r, c).str();
                return os.str();
            }
    return {};
}

Matrix specialize(const Matrix& m, const Rational& q0) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.raw(r, c).is_zero()) out.raw(r, c) = Scalar(m.raw(r, c).evaluate_at(q0));
    return out;
}

}  // namespace qlab
