#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

// Base class for everything the engine can throw on bad input or a broken
// precondition. The CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live on spaces of different dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Malformed or out-of-contract input (non-antisymmetric constants, mixed
// homogeneity where a single degree is required, bad CLI arguments, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// A bivector that was required to satisfy [pi,pi] = 0 does not.
struct NotPoisson : Error {
    using Error::Error;
};

// A bivector on a fibered space fails the fiber-wise linearity shape check.
struct NotFiberwiseLinear : Error {
    using Error::Error;
};

// A bracket that must stay inside the fiber-wise linear subcomplex produced a
// term outside it; indicates an inconsistent input or a convention bug.
struct ClosureViolation : Error {
    using Error::Error;
};

// Requested truncation degree is too small to preserve the Jacobi orders the
// experiment relies on (needs D >= 2k).
struct TruncationTooLow : Error {
    using Error::Error;
};

// Text input rejected by the expression or document parser.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace kstab
