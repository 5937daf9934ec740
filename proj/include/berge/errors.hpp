#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (out-of-range parameters, malformed maps, ...).
struct ParameterError : Error {
    using Error::Error;
};

// Input data violates a structural precondition (host not r-partite,
// decomposition inconsistent with its host, ...).
struct StructureError : Error {
    using Error::Error;
};

// A configured cap was exceeded.
struct SizeError : Error {
    using Error::Error;
};

// Pattern rejected (no edges).
struct PatternError : Error {
    using Error::Error;
};

// Operation defined only for a different uniformity.
struct UniformityError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (e.g. pattern not in the class).
struct DomainError : Error {
    using Error::Error;
};

// An edge-selection step disproved the claimed core property; carries the
// (r-1)-set whose codegree breaks it.
struct CorePropertyError : Error {
    std::vector<int> offending_set;
    CorePropertyError(const std::string& msg, std::vector<int> set)
        : Error(msg), offending_set(std::move(set)) {}
};

struct ParseError : Error {
    std::string code;  // "bad-header", "wrong-arity", "vertex-range", ...
    int line = 0;
    int column = 0;
    ParseError(std::string code_, int line_, int column_, const std::string& msg)
        : Error(msg), code(std::move(code_)), line(line_), column(column_) {}
};

}  // namespace berge
