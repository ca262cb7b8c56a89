#pragma once

#include <stdexcept>
#include <string>

namespace monodesc {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based source position.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    int line;
    int col;
};

// Unusable input from the outside world: missing file, malformed JSON,
// wrong document structure.
struct BadInput : Error {
    using Error::Error;
};

// Violated precondition on otherwise well-formed data (shape mismatch,
// invalid cocycle, targets outside the admissible region, ...).
struct ContractViolation : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Expansion or evaluation at a pole of a coefficient entry.
struct PoleEvaluation : Error {
    using Error::Error;
};

// Series evaluated outside its trusted disk.
struct OutOfDisk : Error {
    using Error::Error;
};

// Seed matrix W0 for a fundamental solution is singular.
struct SingularInitial : Error {
    using Error::Error;
};

// Pole configuration too tight for loop construction.
struct DegenerateGeometry : Error {
    using Error::Error;
};

// Tracked error bound exceeded the requested tolerance.
struct PrecisionLoss : Error {
    using Error::Error;
};

// Gauge matrix with vanishing determinant.
struct SingularGauge : Error {
    using Error::Error;
};

// Real-form construction failed its exact realness certificate.
struct NotDescendable : Error {
    using Error::Error;
};

// No consistent matrix logarithm on the chosen branch.
struct LogBranchFailure : Error {
    using Error::Error;
};

// Iterative refinement stalled or ran out of iterations.
struct NoConvergence : Error {
    NoConvergence(int iterations_, double residual_)
        : Error("no convergence after " + std::to_string(iterations_) +
                " iterations, residual " + std::to_string(residual_)),
          iterations(iterations_), residual(residual_) {}
    int iterations;
    double residual;
};

}  // namespace monodesc
