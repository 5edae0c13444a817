#include "qlab/linear_solve.hpp"

#include "qlab/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qlab {

namespace {

using SparseRow = SparseVector;

SparseRow sparse_row(const Matrix& a, const Matrix* b, std::size_t r) {
    SparseRow row;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a.raw(r, c).is_zero()) row.emplace_back(c, a.raw(r, c));
    if (b)
        for (std::size_t c = 0; c < b->cols(); ++c)
            if (!b->raw(r, c).is_zero()) row.emplace_back(a.cols() + c, b->raw(r, c));
    return row;
}

// a - f * b, both sorted by column
SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - f * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t row_cost(const SparseRow& r) {
    std::size_t w = 0;
    for (const auto& e : r) w += e.second.weight();
    return w;
}

// Echelon form by column-ordered sparse elimination over Q(q). Pivot rows are
// scaled to a leading 1. Only columns below `limit` may hold pivots; rows whose
// leading column reaches `limit` are collected as residuals.
struct Echelon {
    std::vector<std::pair<std::size_t, SparseRow>> pivots;  // (column, row)
    std::vector<SparseRow> residual;
};

Echelon eliminate(std::vector<SparseRow> rows, std::size_t limit) {
    Echelon ech;
    std::map<std::size_t, std::vector<SparseRow>> buckets;
    for (auto& r : rows)
        if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
    while (!buckets.empty()) {
        auto it = buckets.begin();
        std::size_t col = it->first;
        std::vector<SparseRow> group = std::move(it->second);
        buckets.erase(it);
        if (col >= limit) {
            for (auto& r : group) ech.residual.push_back(std::move(r));
            continue;
        }
        std::size_t best = 0, best_cost = row_cost(group[0]);
        for (std::size_t i = 1; i < group.size(); ++i) {
            std::size_t c = row_cost(group[i]);
            if (c < best_cost) {
                best = i;
                best_cost = c;
            }
        }
        SparseRow piv = std::move(group[best]);
        Scalar inv = piv.front().second.inverse();
        for (auto& e : piv) e.second *= inv;
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i == best) continue;
            SparseRow r = axpy(group[i], group[i].front().second, piv);
            if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
        }
        ech.pivots.emplace_back(col, std::move(piv));
    }
    return ech;
}

std::vector<SparseRow> rows_of(const Matrix& a, const Matrix* b) {
    std::vector<SparseRow> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(sparse_row(a, b, r));
    return rows;
}

// pivots in reverse order; free unknowns are zero
Matrix back_substitute(const Echelon& ech, std::size_t n, std::size_t rhs_cols) {
    // solution rows kept sparse: unknown index -> row of rhs_cols values
    std::vector<std::vector<Scalar>> x(n);
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const auto& [col, row] = *it;
        std::vector<Scalar> v(rhs_cols);
        for (const auto& [c, val] : row) {
            if (c == col) continue;
            if (c >= n) {
                v[c - n] += val;
            } else if (!x[c].empty()) {
                for (std::size_t k = 0; k < rhs_cols; ++k)
                    if (!x[c][k].is_zero()) v[k] -= val * x[c][k];
            }
        }
        x[col] = std::move(v);
    }
    Matrix sol(n, rhs_cols);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].empty())
            for (std::size_t k = 0; k < rhs_cols; ++k) sol.raw(i, k) = x[i][k];
    return sol;
}

}  // namespace

SolveResult solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve_linear: row count mismatch");
    Echelon ech = eliminate(rows_of(a, &b), a.cols());
    SolveResult res;
    res.rank = ech.pivots.size();
    if (!ech.residual.empty()) {
        res.status = SolveStatus::inconsistent;
        return res;
    }
    res.solution = back_substitute(ech, a.cols(), b.cols());
    res.status = res.rank == a.cols() ? SolveStatus::unique : SolveStatus::underdetermined;
    return res;
}

SolveResult solve_linear_map(std::size_t rows, std::size_t cols, const std::function<Matrix(const Matrix&)>& f,
                             const Matrix& rhs) {
    std::size_t unknowns = rows * cols, eqs = rhs.rows() * rhs.cols();
    Matrix a(eqs, unknowns), b(eqs, 1);
    for (std::size_t u = 0; u < unknowns; ++u) {
        Matrix e(rows, cols);
        e.raw(u / cols, u % cols) = Scalar(1);
        Matrix img = f(e);
        if (img.rows() != rhs.rows() || img.cols() != rhs.cols()) throw DimensionError("solve_linear_map: shape mismatch");
        for (std::size_t r = 0; r < img.rows(); ++r)
            for (std::size_t c = 0; c < img.cols(); ++c)
                if (!img.raw(r, c).is_zero()) a.raw(r * img.cols() + c, u) = img.raw(r, c);
    }
    for (std::size_t r = 0; r < rhs.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) b.raw(r * rhs.cols() + c, 0) = rhs.raw(r, c);
    SolveResult res = solve_linear(a, b);
    if (res.status != SolveStatus::inconsistent) {
        Matrix x(rows, cols);
        for (std::size_t u = 0; u < unknowns; ++u) x.raw(u / cols, u % cols) = res.solution.raw(u, 0);
        res.solution = std::move(x);
    }
    return res;
}

std::size_t rank(const Matrix& m) {
    return eliminate(rows_of(m, nullptr), m.cols()).pivots.size();
}

std::size_t sparse_rank(std::vector<SparseVector> rows) {
    return eliminate(std::move(rows), static_cast<std::size_t>(-1)).pivots.size();
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
    std::vector<std::size_t> cols;
    for (const auto& p : eliminate(rows_of(m, nullptr), m.cols()).pivots) cols.push_back(p.first);
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::vector<Matrix> nullspace(const Matrix& m) {
    Echelon ech = eliminate(rows_of(m, nullptr), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& p : ech.pivots) is_pivot[p.first] = true;
    std::vector<Matrix> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(m.cols());
        x[f] = Scalar(1);
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            const auto& [col, row] = *it;
            Scalar v;
            for (const auto& [c, val] : row)
                if (c != col && !x[c].is_zero()) v -= val * x[c];
            x[col] = v;
        }
        basis.push_back(Matrix::column(x));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    SolveResult r = solve_linear(m, Matrix::identity(m.rows()));
    if (!r.ok()) return std::nullopt;
    return r.solution;
}

namespace {

// Rows cleared of denominators; returns the product of the row multipliers.
std::vector<std::vector<LaurentPolynomial>> polynomial_rows(const Matrix& m, Scalar& scale) {
    std::vector<std::vector<LaurentPolynomial>> out(m.rows(), std::vector<LaurentPolynomial>(m.cols()));
    scale = Scalar(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        LaurentPolynomial l(1);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& d = m.raw(r, c).denominator();
            if (d.is_constant()) continue;
            LaurentPolynomial g = polynomial_gcd(l, d);
            l = *divide_exact(l * d, g);
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& x = m.raw(r, c);
            if (x.is_zero()) continue;
            out[r][c] = x.numerator() * *divide_exact(l, x.denominator());
        }
        scale *= Scalar(l);
    }
    return out;
}

}  // namespace

Scalar bareiss_determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    Scalar scale;
    auto a = polynomial_rows(m, scale);
    std::size_t n = m.rows();
    LaurentPolynomial prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPolynomial t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = *divide_exact(t, prev);
            }
            a[i][k] = LaurentPolynomial();
        }
        prev = a[k][k];
    }
    Scalar det(a[n - 1][n - 1]);
    if (negate) det = -det;
    return det / scale;
}

std::size_t bareiss_rank(const Matrix& m) {
    Scalar scale;
    auto a = polynomial_rows(m, scale);
    std::size_t rows = m.rows(), cols = m.cols(), r = 0;
    LaurentPolynomial prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPolynomial t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = *divide_exact(t, prev);
            }
            a[i][c] = LaurentPolynomial();
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace qlab
