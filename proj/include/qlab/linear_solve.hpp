#pragma once

#include "qlab/matrix.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qlab {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    // a particular solution (free unknowns set to zero) unless inconsistent
    Matrix solution;
    std::size_t rank = 0;

    bool ok() const { return status == SolveStatus::unique; }
};

// Solves A X = B for every column of B at once.
SolveResult solve_linear(const Matrix& a, const Matrix& b);

// Unknown X of the given shape with f(X) = rhs for a linear map f; the
// solution comes back reshaped to rows x cols.
SolveResult solve_linear_map(std::size_t rows, std::size_t cols, const std::function<Matrix(const Matrix&)>& f,
                             const Matrix& rhs);

std::size_t rank(const Matrix& m);

// (column, value) pairs sorted by column, zero values omitted
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;
std::size_t sparse_rank(std::vector<SparseVector> rows);

// indices of a maximal set of linearly independent columns, leftmost first
std::vector<std::size_t> pivot_columns(const Matrix& m);

// basis of {x : M x = 0} as columns; empty when M is injective
std::vector<Matrix> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// Dense fraction-free elimination over Q[q, q^-1].
Scalar bareiss_determinant(const Matrix& m);
std::size_t bareiss_rank(const Matrix& m);

}  // namespace qlab
