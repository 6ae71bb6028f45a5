#pragma once

#include <stdexcept>
#include <string>

namespace ddecomp {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (decimal literals, expressions, input files).
struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                               std::to_string(col) + ")"
                         : msg),
          line(line), col(col) {}
    int line, col;
};

// Division by zero and similar arithmetic violations.
struct ArithmeticError : Error {
    using Error::Error;
};

// Precondition violations on mathematical operations (zero polynomial,
// missing variable, endpoint is a root, ...).
struct DomainError : Error {
    using Error::Error;
};

// A family is degenerate for the pipeline: identically vanishing leading
// coefficient, a root pinned at z = 1 for all parameters, or R = I = 0.
struct DegenerateFamilyError : Error {
    using Error::Error;
};

// The real/imaginary pair shares a divisor depending on the frequency
// variable, so the elimination resultant vanishes identically and the
// border construction does not apply.
struct CommonFactorError : Error {
    using Error::Error;
};

// Matrix dimension mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// A sample point classified as marginal: it touches the border, which
// violates the cloud construction invariant.
struct BorderContactError : Error {
    using Error::Error;
};

// The leading coefficient vanished at a sample point.
struct DegreeDropError : Error {
    using Error::Error;
};

}  // namespace ddecomp
