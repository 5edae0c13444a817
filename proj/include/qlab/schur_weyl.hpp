#pragma once

#include "qlab/braidings.hpp"

#include <string>
#include <vector>

namespace qlab {

struct Partition {
    std::vector<int> parts;

    int size() const;
    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// Partitions of k in reverse lexicographic order: (k), (k-1,1), ...
std::vector<Partition> partitions(int k);

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // entries 1..k
    int index = 1;                       // 1-based position within its shape

    int row_of(int entry) const;
    int content_of(int entry) const;
};

// Standard tableaux of a shape, indexed by last-letter order: compare the rows
// holding k, k-1, ..., 1 in turn; the tableau with the entry in the upper row
// comes first.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

inline constexpr std::size_t default_tensor_cap = 81;

// [R_1 .. R_{k-1}] acting on V^(x)k; braid, commutation and class relations
// are verified. Throws on k < 2 or N^k above the cap.
std::vector<Matrix> hecke_rep(const Braiding& r, int k, std::size_t size_cap = default_tensor_cap);

struct ProjectorEntry {
    StandardTableau tableau;
    Matrix projector;
    std::size_t rank = 0;
};

struct ProjectorBank {
    int k = 0;
    std::vector<ProjectorEntry> entries;
    std::vector<CheckEntry> checks;

    const ProjectorEntry& find(const Partition& shape, int a) const;
};

// Primitive idempotents E^lambda_a from Jucys-Murphy elements. Idempotency,
// orthogonality, completeness and rank additivity are checked and any
// failure throws.
ProjectorBank young_projectors(const Braiding& r, int k, std::size_t size_cap = default_tensor_cap);

struct DecompositionEntry {
    Partition shape;
    int a = 1;
    std::size_t dim = 0;
};

std::vector<DecompositionEntry> decompose(const ProjectorBank& bank);
std::vector<DecompositionEntry> decompose(const Braiding& r, int k);

// The linear system relating the entries of L_1bar L_2bar to l (x) l:
// row ((i1 i2) (j1 j2)) of L_1bar L_2bar = sum_beta K[row][beta] (l (x) l)_beta,
// beta = ((i N + a) N + b) N + d for l_i^a (x) l_b^d.
Matrix two_copy_matrix(const Braiding& r);

struct QProjectors {
    Matrix Q, S, A;
    bool q_ybe = false;
    std::vector<CheckEntry> checks;
};

QProjectors q_projectors(const ExtendedBraiding& ext, const EndBraiding& end);

}  // namespace qlab
