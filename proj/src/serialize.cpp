#include "qlab/serialize.hpp"

#include "qlab/errors.hpp"

namespace qlab {

namespace {

struct EntryError : Error {
    EntryError(const std::string& msg, std::string text) : Error(msg), text(std::move(text)) {}
    std::string text;
};

void locate(const std::string& text, std::size_t end, std::size_t& line, std::size_t& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < end && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

}  // namespace

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw Error("matrix rows must be non-empty arrays");
    Matrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error("row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& x = j[r][c];
            std::string text = x.is_string() ? x.get<std::string>() : x.is_number_integer() ? x.dump() : "";
            if (text.empty()) throw Error("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not a scalar");
            try {
                m(r, c) = parse_scalar(text);
            } catch (const ParseError& e) {
                std::string why = e.what();
                auto at = why.rfind(" at line");
                if (at != std::string::npos) why = why.substr(0, at);
                throw EntryError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") \"" + text + "\", column " +
                                     std::to_string(e.column) + ": " + why,
                                 text);
            }
        }
    }
    return m;
}

Json to_json(const CheckEntry& c) {
    Json j = {{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.value.empty()) j["value"] = c.value;
    return j;
}

CheckEntry check_from_json(const Json& j) {
    CheckEntry c;
    c.name = j.at("name").get<std::string>();
    c.anchor = j.at("anchor").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    c.witness = j.value("witness", std::string());
    c.value = j.value("value", std::string());
    return c;
}

Json to_json(const GeneratorRep& rho) {
    Json images = Json::array();
    for (const auto& m : rho.images) images.push_back(to_json(m));
    Json j = {{"label", rho.label}, {"carrier_dim", rho.carrier_dim}, {"images", images}};
    if (rho.chi) j["chi"] = rho.chi->str();
    return j;
}

Json to_json(const std::vector<DecompositionEntry>& dec) {
    Json out = Json::array();
    for (const auto& e : dec) out.push_back({{"partition", e.shape.parts}, {"a", e.a}, {"dim", e.dim}});
    return out;
}

Json to_json(const NcPolynomial& p) {
    Json out = Json::array();
    for (const auto& [w, c] : p.terms()) out.push_back({{"word", w}, {"coeff", c.str()}});
    return out;
}

Json to_json(const RelationSet& rels) {
    Json polys = Json::array();
    for (const auto& p : rels.polynomials()) polys.push_back(to_json(p));
    return {{"n", rels.n}, {"hbar", rels.hbar.str()}, {"relations", polys}};
}

Json to_json(const SlPresentation& slp) {
    Json mixed = Json::array();
    for (const auto& p : slp.mixed) mixed.push_back(to_json(p));
    Json checks = Json::array();
    for (const auto& c : slp.checks) checks.push_back(to_json(c));
    return {{"n", slp.n},
            {"trC", slp.trC.str()},
            {"ell", to_json(slp.ell)},
            {"shift", to_json(slp.pi)},
            {"ell_generator", slp.ell_index()},
            {"mixed", mixed},
            {"trace_constraint", to_json(slp.trace_constraint)},
            {"quotient", to_json(slp.quotient)},
            {"checks", checks}};
}

Json structure_constants_json(const Matrix& bracket, std::size_t n) {
    std::size_t n2 = n * n;
    Json out = Json::array();
    for (std::size_t x = 0; x < n2; ++x)
        for (std::size_t y = 0; y < n2; ++y)
            for (std::size_t t = 0; t < n2; ++t) {
                const Scalar& c = bracket(t, x * n2 + y);
                if (c.is_zero()) continue;
                out.push_back({x / n, x % n, y / n, y % n, t, c.str()});
            }
    return out;
}

Json to_json(const SymmetrySpec& spec) {
    switch (spec.kind) {
    case SymmetrySpec::Kind::flip: return {{"kind", "flip"}, {"n", spec.n}};
    case SymmetrySpec::Kind::super_flip: return {{"kind", "super_flip"}, {"m", spec.m}, {"n", spec.n}};
    case SymmetrySpec::Kind::standard_a_series: return {{"kind", "standard_a_series"}, {"n", spec.n}};
    case SymmetrySpec::Kind::explicit_matrix:
        return {{"kind", "explicit"}, {"n", spec.n}, {"entries", to_json(spec.entries)}};
    }
    return {};
}

namespace {

std::size_t positive(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw Error(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

SymmetrySpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw Error("spec must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw Error("missing string field \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "flip") return SymmetrySpec::flip(positive(j, "n"));
    if (kind == "super_flip") return SymmetrySpec::super_flip(positive(j, "m"), positive(j, "n"));
    if (kind == "standard_a_series") return SymmetrySpec::standard_a_series(positive(j, "n"));
    if (kind == "explicit") {
        std::size_t n = positive(j, "n");
        if (!j.contains("entries")) throw Error("missing field \"entries\"");
        Matrix m = matrix_from_json(j.at("entries"));
        if (m.rows() != n * n || m.cols() != n * n) throw DimensionError("entries must be N^2 x N^2 for n = " + std::to_string(n));
        return SymmetrySpec::explicit_matrix(m);
    }
    throw Error("unknown kind \"" + kind + "\"");
}

SymmetrySpec parse_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line, col;
        locate(text, e.byte == 0 ? 0 : e.byte - 1, line, col);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError("invalid JSON: " + (pos == std::string::npos ? msg : msg.substr(pos)), line, col);
    }
    try {
        return spec_from_json(j);
    } catch (const EntryError& e) {
        // first occurrence of the offending string literal
        std::size_t line = 0, col = 0;
        auto at = text.find(Json(e.text).dump());
        if (at != std::string::npos) locate(text, at, line, col);
        throw ParseError(e.what(), line, col);
    }
}

}  // namespace qlab
