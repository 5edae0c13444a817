#pragma once

#include "qlab/checks.hpp"
#include "qlab/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlab {

enum class SymmetryClass { involutive, hecke };

const char* to_string(SymmetryClass c);

struct SymmetrySpec {
    enum class Kind { flip, super_flip, standard_a_series, explicit_matrix };
    Kind kind = Kind::flip;
    std::size_t n = 2;  // dim V; for super_flip the odd part
    std::size_t m = 0;  // even part of a super_flip
    Matrix entries;     // explicit only, N^2 x N^2, row (i j) = i N + j

    static SymmetrySpec flip(std::size_t n) { return {Kind::flip, n, 0, {}}; }
    static SymmetrySpec super_flip(std::size_t m, std::size_t n) { return {Kind::super_flip, n, m, {}}; }
    static SymmetrySpec standard_a_series(std::size_t n) { return {Kind::standard_a_series, n, 0, {}}; }
    static SymmetrySpec explicit_matrix(Matrix r);

    std::size_t dim() const { return kind == Kind::super_flip ? m + n : n; }
    std::string label() const;
};

// Braiding on V (x) V, dim V = N. matrix() holds R_ij^kl at
// (i*N + j, k*N + l), so that R(x_i (x) x_j) = R_ij^kl x_k (x) x_l.
// op() is the same map acting on column vectors, i.e. the transpose.
class Braiding {
public:
    std::size_t dim() const { return n_; }
    const Matrix& matrix() const { return r_; }
    const Matrix& op() const { return op_; }
    const Matrix& inverse_matrix() const { return rinv_; }
    SymmetryClass symmetry_class() const { return cls_; }
    bool is_hecke() const { return cls_ == SymmetryClass::hecke; }
    const SymmetrySpec& origin() const { return origin_; }
    // q - q^-1 for Hecke symmetries, 0 for involutive ones
    Scalar omega() const;
    // R_ij^kl
    const Scalar& entry(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return r_.raw(i * n_ + j, k * n_ + l);
    }

    friend Braiding build_symmetry(const SymmetrySpec& spec);

private:
    std::size_t n_ = 0;
    Matrix r_, op_, rinv_;
    SymmetryClass cls_ = SymmetryClass::involutive;
    SymmetrySpec origin_;
};

// Throws CertificationError (YBE witness or class evidence) on failure.
Braiding build_symmetry(const SymmetrySpec& spec);

// YBE residual check on V^(x)3 for an arbitrary N^2 x N^2 matrix; witness names
// the first failing index triples
CheckEntry check_yang_baxter(const Matrix& r, std::size_t n);
// involutive if R^2 = I, Hecke if (R - q)(R + q^-1) = 0
std::optional<SymmetryClass> classify(const Matrix& r, std::string* evidence = nullptr);

struct SkewInverseData {
    Matrix psi;
    Matrix B, C;
    int a = 0;
    Scalar trC;
    bool sl_available() const { return !trC.is_zero(); }
};

// Unique Psi with Tr_2 Psi_12 R_23 = P_13; second identity verified too.
Matrix skew_inverse(const Braiding& r);
SkewInverseData bc_data(const Braiding& r, const Matrix& psi);

struct Certificate {
    bool ybe = false;
    std::optional<SymmetryClass> cls;
    bool skew_invertible = false;
    std::vector<CheckEntry> checks;
    bool all_pass() const;
};

Certificate certify_symmetry(const Braiding& r);
// works on raw matrices that could not become a Braiding
Certificate certify_matrix(const Matrix& r, std::size_t n);

// Braidings between V and its right dual V* (basis x^j); all blocks are
// operators on column vectors with row-major tensor indices.
struct ExtendedBraiding {
    Braiding base;
    SkewInverseData skew;
    Matrix vv;          // V (x) V   -> V (x) V
    Matrix v_dual;      // V (x) V*  -> V* (x) V
    Matrix dual_v;      // V* (x) V  -> V (x) V*
    Matrix dual_dual;   // V* (x) V* -> V* (x) V*
    Matrix left_pairing;   // 1 x N^2 on V* (x) V: <x^j, x_k> = B_k^j
    Matrix right_pairing;  // 1 x N^2 on V (x) V*: <x_i, x^j> = delta
    std::vector<CheckEntry> checks;

    std::size_t dim() const { return base.dim(); }
    // the braiding of (V + V*)^(x)2, basis x_0..x_{N-1}, x^0..x^{N-1}
    Matrix assembled() const;
};

ExtendedBraiding extend_to_dual(const Braiding& r, const SkewInverseData& skew);

// R_End(V) on End(V)^(x)2 = V (x) V* (x) V (x) V*; basis of End(V) is
// l_i^j <-> x_i (x) x^j at index i*N + j.
struct EndBraiding {
    Matrix matrix;
    TensorLayout layout;
    std::vector<CheckEntry> checks;
};

EndBraiding end_braiding(const ExtendedBraiding& ext);

// Multiplication l_i^j o l_k^m = B_k^j l_i^m as an N^2 x N^4 matrix.
Matrix end_multiplication(const SkewInverseData& skew, std::size_t n);

// Fold a braiding of End(V) past V and V* into R_End(V),U for a word U in
// {V, V*}: End(V) (x) U -> U (x) End(V). `dual[i]` marks V* factors.
Matrix end_braiding_with(const ExtendedBraiding& ext, const std::vector<bool>& dual);

}  // namespace qlab
