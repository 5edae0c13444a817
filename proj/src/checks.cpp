#include "qlab/checks.hpp"

namespace qlab {

CheckEntry check_equal(std::string name, std::string_view anchor, const Matrix& lhs, const Matrix& rhs) {
    CheckEntry e{std::move(name), std::string(anchor), false, difference(lhs, rhs), {}};
    e.pass = e.witness.empty();
    return e;
}

CheckEntry check_zero(std::string name, std::string_view anchor, const Matrix& m) {
    CheckEntry e{std::move(name), std::string(anchor), false, m.first_nonzero(), {}};
    e.pass = e.witness.empty();
    if (!e.pass) e.witness = "nonzero entry " + e.witness;
    return e;
}

CheckEntry check_true(std::string name, std::string_view anchor, bool ok, std::string witness) {
    CheckEntry e{std::move(name), std::string(anchor), ok, {}, {}};
    if (!ok) e.witness = witness.empty() ? "condition does not hold" : std::move(witness);
    return e;
}

bool all_pass(const std::vector<CheckEntry>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string first_failure(const std::vector<CheckEntry>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return c.name + ": " + c.witness;
    return {};
}

}  // namespace qlab
