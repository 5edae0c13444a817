#pragma once

#include "qlab/mrea.hpp"
#include "qlab/schur_weyl.hpp"

#include <vector>

namespace qlab {

// [l_beta] = sum_t bracket(t, beta) l_t with beta = x*N^2 + y for l_x (x) l_y.
struct BracketData {
    std::size_t n = 0;
    Matrix bracket;  // N^2 x N^4
    Matrix K;        // two_copy_matrix
    Matrix Q, S, A;
};

// G(e, t): coefficient of l_t in entry e of L_1 R - R L_1
Matrix bracket_targets(const Braiding& r);

BracketData bracket_tensor(const Braiding& r, const QProjectors& qp);

// ad(l_i^j) on End(V); compared against tensor_rep(rho_1, rho_1*) and
// throws on mismatch.
GeneratorRep adjoint_rep(const BracketData& bd, const ExtendedBraiding& ext);

// eq-form evaluated in rho: rho(L_1bar L_2bar - Q(L_1bar L_2bar)) = rho([L_1bar, L_2bar])
CheckEntry check_bracket_in_rep(const BracketData& bd, const GeneratorRep& rho);

// q-skew-symmetry, bracket A_q = bracket, q-Jacobi on the N^6 domain, and both
// R_End-invariance identities.
std::vector<CheckEntry> verify_bracket_axioms(const BracketData& bd, const EndBraiding& end);

// [l_i^j, l_k^m] = delta_k^j l_i^m - delta_i^m l_k^j
Matrix classical_structure_constants(std::size_t n);

struct RTrace {
    std::size_t n = 0;
    Matrix C, B;
    Matrix weights_l;       // 1 x N^2, Tr_R l_i^j = C_j^i
    Matrix h_basis;         // column (i, j) holds h_i^j = sum_k C_k^j l_i^k in l-coordinates
    Matrix weights_h;       // 1 x N^2 on h-coordinates, Tr_R h_i^j = B_j^i
    Matrix weights_h_on_l;  // the h-convention functional in l-coordinates
};

RTrace r_trace_data(const SkewInverseData& skew);
// x: N^2 x 1 in l-coordinates
Scalar r_trace(const RTrace& rt, const Matrix& x);
// x: N^2 x 1 in h-coordinates
Scalar r_trace_h(const RTrace& rt, const Matrix& x);

struct InvolutiveReport {
    Matrix bracket;  // [X, Y] = X o Y - o R_End(X (x) Y)
    std::vector<CheckEntry> checks;
    FilteredDims enveloping, symmetric;
};

// [l_i^j, l_k^m} for gl(m|n) in the h-basis, parities from the super flip
Matrix super_commutator_table(std::size_t m, std::size_t n);

InvolutiveReport involutive_axioms_check(const ExtendedBraiding& ext, const EndBraiding& end, int pbw_degree = 3);

}  // namespace qlab
