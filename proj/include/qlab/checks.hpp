#pragma once

#include "qlab/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qlab {

// One named verification outcome; witness is empty on success.
struct CheckEntry {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string witness;
    std::string value;
};

CheckEntry check_equal(std::string name, std::string_view anchor, const Matrix& lhs, const Matrix& rhs);
CheckEntry check_zero(std::string name, std::string_view anchor, const Matrix& m);
CheckEntry check_true(std::string name, std::string_view anchor, bool ok, std::string witness = {});

bool all_pass(const std::vector<CheckEntry>& checks);
// first failing entry as "name: witness", or empty
std::string first_failure(const std::vector<CheckEntry>& checks);

}  // namespace qlab
