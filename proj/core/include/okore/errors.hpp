#pragma once

#include <stdexcept>
#include <string>

namespace okore {

/// Raised when a generator letter is outside 1..n or an input is structurally bad.
struct MalformedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when two operands declare different generator counts.
struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix-model level is too small for the element being embedded.
struct LevelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when two operators have incompatible shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a vector does not lie in the carrier of the requested bimodule.
struct CarrierError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a scalar argument is outside the exactly-representable set
/// required by an operation (e.g. gauge evaluation off the 4th roots of unity).
struct UnsupportedScalarError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedDescriptorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a fullness witness is requested for a non-full correspondence.
struct NoWitnessError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

}  // namespace okore
