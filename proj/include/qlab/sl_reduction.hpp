#pragma once

#include "qlab/qlie.hpp"

#include <optional>
#include <vector>

namespace qlab {

// l = Tr_R L; symbolic (degree-2 ideal membership of l l_t - l_t l) and in each rep.
std::vector<CheckEntry> ell_center_check(const RelationSet& rels, const SkewInverseData& skew,
                                         const std::vector<GeneratorRep>& reps = {});

// Generators f_t (t = i*N + j) and l (index N^2) after l_i^j = f_i^j + (Tr C)^-1 delta_i^j l.
struct SlPresentation {
    std::size_t n = 0;
    Scalar trC;
    Matrix ell;  // 1 x N^2: l = sum ell(0, t) l_t
    Matrix pi;   // f_s = sum_r pi(r, s) l_r
    std::vector<NcPolynomial> mixed;    // first family (N^4 entries), then l f_t - f_t l
    std::vector<NcPolynomial> shifted;  // the mREA relations after the substitution
    NcPolynomial trace_constraint;      // Tr_R F
    RelationSet quotient;               // mixed relations at l = 0, in the f_t
    std::vector<CheckEntry> checks;

    std::size_t generators() const { return n * n + 1; }
    int ell_index() const { return static_cast<int>(n * n); }
};

// Throws "sl-reduction unavailable" when Tr C = 0.
SlPresentation sl_present(const Braiding& r, const SkewInverseData& skew);

struct SlAdjoint {
    GeneratorRep rep;  // ad(f_t) on End(V)
    std::vector<CheckEntry> checks;
    bool coincides_with_restricted_bracket = false;
    // q-Jacobi for the restricted bracket; expected to fail at generic q
    CheckEntry restricted_jacobi;
};

// Throws when one of the four identities fails.
SlAdjoint sl_adjoint_rep(const Braiding& r, const BracketData& bd, const SlPresentation& slp);

struct TwistedRep {
    GeneratorRep rep;
    Scalar z;
    std::optional<Scalar> xi;  // 1 - (q - q^-1) (Tr C)^-1 chi when chi is known
};

// rho^z(l_i^j) = z rho(l_i^j) + delta_i^j (1 - z)(q - q^-1)^-1 I; throws unless the
// result is again a representation.
TwistedRep z_twist(const GeneratorRep& rho, const Scalar& z, const Braiding& r, const SkewInverseData& skew);

struct ReducedRep {
    GeneratorRep rep;  // images of f_i^j
    Scalar xi;
    std::vector<CheckEntry> checks;
};

// Throws "reduction singular" when xi = 0 and refuses Tr C = 0 or a missing chi.
ReducedRep sl_reduce_rep(const GeneratorRep& rho, const Braiding& r, const SkewInverseData& skew);

}  // namespace qlab
