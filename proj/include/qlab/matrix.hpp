#pragma once

#include "qlab/rational_function.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qlab {

using Scalar = RationalFunction;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Scalar& s);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix column(const std::vector<Scalar>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    // bounds-checked
    Scalar& at(std::size_t r, std::size_t c);
    const Scalar& at(std::size_t r, std::size_t c) const;
    Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    // unchecked
    Scalar& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    Matrix transpose() const;
    Scalar trace() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix map(Scalar (*f)(const Scalar&)) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(const Matrix& a) { return a * Scalar(-1); }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // "(r, c): value" of the first nonzero entry in row-major order, or empty
    std::string first_nonzero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Ordered factor dimensions of a tensor product; row-major, first factor slowest.
struct TensorLayout {
    std::vector<std::size_t> factor_dims;

    TensorLayout() = default;
    TensorLayout(std::initializer_list<std::size_t> dims) : factor_dims(dims) {}
    explicit TensorLayout(std::vector<std::size_t> dims) : factor_dims(std::move(dims)) {}
    static TensorLayout uniform(std::size_t n, std::size_t k) { return TensorLayout(std::vector<std::size_t>(k, n)); }

    std::size_t size() const;
    std::size_t factors() const { return factor_dims.size(); }
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix kronecker(const std::vector<Matrix>& factors);

// op acting on factors pos, pos+1 (1-based, as in R_i); identity elsewhere
Matrix place_operator(const Matrix& op, std::size_t pos, const TensorLayout& layout);

// trace over factor (1-based); result lives on the layout with that factor removed
Matrix partial_trace(const Matrix& m, const TensorLayout& layout, std::size_t factor);

// P on V_a (x) V_b -> V_b (x) V_a
Matrix swap_operator(std::size_t a, std::size_t b);

// entrywise evaluation at q = q0; throws PoleError
Matrix specialize(const Matrix& m, const Rational& q0);

// both sides equal; otherwise a description of the first mismatching entry
std::string difference(const Matrix& lhs, const Matrix& rhs);

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.raw(r, c);
    }
    return os << ']';
}

}  // namespace qlab
