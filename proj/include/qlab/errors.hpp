#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Raised when a construction fails one of its defining identities.
struct CertificationError : Error {
    CertificationError(const std::string& what, std::string witness)
        : Error(what + (witness.empty() ? std::string() : ": " + witness)), witness(std::move(witness)) {}
    std::string witness;
};

}  // namespace qlab
