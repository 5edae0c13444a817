#pragma once

#include <string_view>
#include <array>

// Fixed tags attached to report entries, one per verified identity family.
namespace qlab::anchor {

inline constexpr std::string_view yang_baxter = "yang-baxter";
inline constexpr std::string_view symmetry_class = "symmetry-class";
inline constexpr std::string_view skew_inverse = "skew-inverse";
inline constexpr std::string_view b_matrix = "b-matrix";
inline constexpr std::string_view trace_identity = "trace-identity";
inline constexpr std::string_view cb_exponent = "cb-exponent";
inline constexpr std::string_view dual_extension = "dual-extension";
inline constexpr std::string_view pairing_invariance = "pairing-invariance";
inline constexpr std::string_view end_braiding = "end-braiding";
inline constexpr std::string_view product_invariance = "product-invariance";
inline constexpr std::string_view hecke_representation = "hecke-representation";
inline constexpr std::string_view young_projector = "young-projector";
inline constexpr std::string_view decomposition = "tensor-decomposition";
inline constexpr std::string_view q_operator = "q-operator";
inline constexpr std::string_view mrea = "mrea-relations";
inline constexpr std::string_view eq_form = "eq-form";
inline constexpr std::string_view vector_rep = "vector-representation";
inline constexpr std::string_view covector_rep = "covector-representation";
inline constexpr std::string_view tensor_rep = "tensor-representation";
inline constexpr std::string_view restricted_rep = "restricted-representation";
inline constexpr std::string_view coproduct = "braided-coproduct";
inline constexpr std::string_view counit = "counit";
inline constexpr std::string_view flatness = "flatness";
inline constexpr std::string_view adjoint = "adjoint-action";
inline constexpr std::string_view q_bracket = "q-lie-bracket";
inline constexpr std::string_view q_skew = "q-skew";
inline constexpr std::string_view q_jacobi = "q-jacobi";
inline constexpr std::string_view bracket_invariance = "bracket-invariance";
inline constexpr std::string_view r_trace = "r-trace";
inline constexpr std::string_view lie_axioms = "generalized-lie-axioms";
inline constexpr std::string_view enveloping = "enveloping-pbw";
inline constexpr std::string_view central_element = "central-element";
inline constexpr std::string_view shift = "generator-shift";
inline constexpr std::string_view sl_relations = "sl-relations";
inline constexpr std::string_view sl_adjoint = "sl-adjoint";
inline constexpr std::string_view z_twist = "z-twist";
inline constexpr std::string_view sl_reduction = "sl-reduction";

inline constexpr std::array<std::string_view, 37> table = {
    yang_baxter, symmetry_class, skew_inverse, b_matrix, trace_identity, cb_exponent, dual_extension,
    pairing_invariance, end_braiding, product_invariance, hecke_representation, young_projector,
    decomposition, q_operator, mrea, eq_form, vector_rep, covector_rep, tensor_rep, restricted_rep,
    coproduct, counit, flatness, adjoint, q_bracket, q_skew, q_jacobi, bracket_invariance, r_trace,
    lie_axioms, enveloping, central_element, shift, sl_relations, sl_adjoint, z_twist, sl_reduction,
};

}  // namespace qlab::anchor
