#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6 word, edge-list file). Carries the byte
/// offset of the first offending character.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t byte_offset)
        : error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

/// Invalid argument values (bad vertex index, k out of range, ...).
struct argument_error : error {
    using error::error;
};

/// Matrix/vector dimension mismatch.
struct dimension_error : error {
    using error::error;
};

/// Input exceeds a documented size cap (graph6 n>62, enumeration n>7, ...).
struct unsupported_error : error {
    using error::error;
};

/// Undefined numeric operation (valuation of 0, resultant of zero poly, ...).
struct numeric_error : error {
    using error::error;
};

/// An exact identity that must hold was violated. Never swallowed: either
/// the implementation is wrong or the identity itself fails.
struct identity_violation : error {
    identity_violation(const std::string& what_failed, const std::string& lhs,
                       const std::string& rhs)
        : error(what_failed + ": lhs=" + lhs + " rhs=" + rhs),
          lhs_value(lhs), rhs_value(rhs) {}
    std::string lhs_value;
    std::string rhs_value;
};

/// Two internal routes that must agree disagreed. Indicates a bug; mapped
/// to a dedicated exit code by the CLI.
struct internal_contradiction : error {
    using error::error;
};

} // namespace qwalk
