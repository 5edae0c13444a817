#pragma once

#include "qlab/sl_reduction.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qlab {

using Json = nlohmann::json;

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const CheckEntry& c);
CheckEntry check_from_json(const Json& j);

Json to_json(const GeneratorRep& rho);
Json to_json(const std::vector<DecompositionEntry>& dec);
Json to_json(const NcPolynomial& p);
Json to_json(const RelationSet& rels);
Json to_json(const SlPresentation& slp);

// rows [i, j, k, m, target, coefficient] for [l_i^j, l_k^m] = sum coefficient * l_target
Json structure_constants_json(const Matrix& bracket, std::size_t n);

Json to_json(const SymmetrySpec& spec);
SymmetrySpec spec_from_json(const Json& j);
// JSON text; ParseError carries line and column
SymmetrySpec parse_spec(const std::string& text);

}  // namespace qlab
