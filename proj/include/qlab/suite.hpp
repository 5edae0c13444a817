#pragma once

#include "qlab/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlab {

inline constexpr const char* tool_version = "0.1.0";

enum class Suite { certify, decompose, mrea, bracket, sl, pbw, all };

const char* to_string(Suite s);
// throws Error on an unknown name
Suite suite_from_string(const std::string& name);

struct SuiteConfig {
    SymmetrySpec spec;
    Suite suite = Suite::all;
    int max_k = 0;        // 0: 4 for N = 2, else 3
    int pbw_degree = -1;  // -1: the degree cap
    int degree_cap = default_degree_cap;
    bool timings = false;
    bool artifacts = false;  // representations, structure constants, sl presentation
};

// QLAB_DEGREE_CAP if set and valid, else the default
int degree_cap_from_env();

struct ReportEntry {
    std::string stage;
    CheckEntry check;
    std::optional<double> wall_ms;
};

struct Report {
    std::string tool = "qlab";
    std::string version = tool_version;
    Json input = Json::object();
    std::vector<ReportEntry> entries;
    Json data = Json::object();
    Json artifacts;  // null unless requested
    std::optional<std::string> error;

    std::size_t passed() const;
    std::size_t failed() const;
};

// 0 all pass, 1 any check fails, 2 construction error
int exit_code(const Report& r);

// Never throws for mathematical failures; a construction error ends the run
// and is stored in Report::error with the entries gathered so far.
Report run_suite(const SuiteConfig& cfg);

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string emit_json(const Report& r);
std::string emit_markdown(const Report& r);

}  // namespace qlab
