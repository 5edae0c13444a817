#pragma once

#include "qlab/braidings.hpp"
#include "qlab/schur_weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlab {

using Word = std::vector<int>;

// Finite linear combination of words in numbered generators; the empty word is the unit.
class NcPolynomial {
public:
    NcPolynomial() = default;
    static NcPolynomial unit(const Scalar& c = Scalar(1));
    static NcPolynomial generator(int g, const Scalar& c = Scalar(1));

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    Scalar coefficient(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);

    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
    friend NcPolynomial operator*(const Scalar& s, const NcPolynomial& a);
    friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

    // replace generator g by images[g]
    NcPolynomial substitute(const std::vector<NcPolynomial>& images) const;
    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Word, Scalar> terms_;
};

class NcMatrix {
public:
    NcMatrix() = default;
    NcMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit NcMatrix(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    NcPolynomial& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const NcPolynomial& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    friend NcMatrix operator*(const NcMatrix& a, const NcMatrix& b);
    friend NcMatrix operator+(const NcMatrix& a, const NcMatrix& b);
    friend NcMatrix operator-(const NcMatrix& a, const NcMatrix& b);
    friend NcMatrix operator*(const Scalar& s, const NcMatrix& a);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<NcPolynomial> data_;
};

// L_1 = L (x) I on V (x) V with L_i^j = generator i*N + j
NcMatrix first_copy(std::size_t n);

// Relations sum quadratic[r][x*N^2 + y] l_x l_y + sum linear[r][t] l_t = 0, generator
// l_i^j numbered i*N + j. The N^4 mREA relations are the entries of
// R L_1 R L_1 - L_1 R L_1 R - hbar (R L_1 - L_1 R) in row-major order.
struct RelationSet {
    std::size_t n = 0;
    Scalar hbar = Scalar(1);
    Matrix quadratic;
    Matrix linear;
    std::vector<CheckEntry> checks;

    std::size_t generators() const { return n * n; }
    std::size_t size() const { return quadratic.rows(); }
    NcPolynomial relation(std::size_t r) const;
    std::vector<NcPolynomial> polynomials() const;
    static RelationSet from_polynomials(std::size_t n, const Scalar& hbar, const std::vector<NcPolynomial>& rels);
};

RelationSet relation_set(const Braiding& r, const Scalar& hbar = Scalar(1));

// U(gl(N)) with [l_i^j, l_k^m] = delta_k^j l_i^m - delta_i^m l_k^j
RelationSet classical_gl_relations(std::size_t n);

// rank of the stacked coefficient rows; equal spans iff all three ranks agree
bool same_span(const RelationSet& a, const RelationSet& b);

struct GeneratorRep {
    std::size_t carrier_dim = 0;
    std::vector<Matrix> images;  // index i*N + j
    std::optional<Scalar> chi;
    bool equivariant = false;
    // carrier as a word in {V, V*} (true marks V*) when the braiding past it is known
    std::optional<std::vector<bool>> word;
    std::string label;

    const Matrix& image(std::size_t i, std::size_t j) const;
};

// rho(l) = sum C_j^i rho(l_i^j)
Matrix ell_image(const GeneratorRep& rho, const SkewInverseData& skew);
// sets chi when rho(l) is scalar
void attach_chi(GeneratorRep& rho, const SkewInverseData& skew);

GeneratorRep vector_rep(const Braiding& r, const SkewInverseData& skew);
GeneratorRep covector_rep(const Braiding& r, const SkewInverseData& skew);

// Pass, or the first failing relation with its nonzero block.
CheckEntry check_representation(const GeneratorRep& rho, const Braiding& r, const Scalar& hbar = Scalar(1));
// Same, substituting into an arbitrary relation set.
CheckEntry check_representation(const GeneratorRep& rho, const RelationSet& rels);

struct DeltaTerm {
    int left = -1;  // generator index, -1 for the unit
    int right = -1;
    Scalar coeff;
};

struct BialgebraMaps {
    std::size_t n = 0;
    std::vector<std::vector<DeltaTerm>> delta;  // per generator
    std::vector<Scalar> epsilon;               // per generator; the unit maps to 1
    std::vector<CheckEntry> checks;
};

BialgebraMaps bialgebra_maps(const Braiding& r);

// rho_{U (x) W}(l_i^j) = rho_U(l_i^j) (x) I + T_ij - omega sum_k (rho_U(l_i^k) (x) I) T_kj,
// T_b (u (x) w) = sum Z[(u', b'), (b, u)] u' (x) rho_W(b') w, Z = R_End(V),U.
GeneratorRep tensor_rep(const GeneratorRep& u, const GeneratorRep& w, const Matrix& braid_u, const Scalar& omega);
GeneratorRep tensor_rep(const GeneratorRep& u, const GeneratorRep& w, const ExtendedBraiding& ext);

// rho on V^(x)k, built as ((V (x) V) (x) V) ...
GeneratorRep tensor_power_rep(const ExtendedBraiding& ext, int k);

GeneratorRep restrict_rep(const GeneratorRep& rho, const ProjectorBank& bank, const Partition& shape, int a);

struct FilteredDims {
    int max_degree = 0;
    std::vector<std::size_t> dims;
};

inline constexpr int default_degree_cap = 3;

FilteredDims filtered_dimension(const RelationSet& rels, int d, int cap = default_degree_cap);

// whether p lies in the span of u r v with |u| + |v| + deg r <= degree
bool in_truncated_ideal(const RelationSet& rels, const NcPolynomial& p, int degree);
bool in_truncated_ideal(const std::vector<NcPolynomial>& rels, std::size_t generators, const NcPolynomial& p, int degree);
std::size_t truncated_ideal_rank(const std::vector<NcPolynomial>& rels, std::size_t generators, int degree);

}  // namespace qlab
