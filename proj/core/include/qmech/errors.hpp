#ifndef QMECH_ERRORS_HPP
#define QMECH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmech {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// eval_numeric met a parameter with no binding.
struct UnboundParameterError : Error {
    explicit UnboundParameterError(const std::string& name)
        : Error("unbound parameter: " + name), parameter(name) {}
    std::string parameter;
};

// eval_numeric hit a vanishing denominator at the requested point.
struct SingularEvaluationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    int line;
    int col;
};

// An operation needed more truncation degree than the operator carries.
struct DegreeOverflowError : Error {
    using Error::Error;
};

// find_conserved could not solve the coefficient conditions.
struct SolveError : Error {
    using Error::Error;
};

// Word rewriting exceeded its step budget.
struct ReductionBudgetError : Error {
    using Error::Error;
};

// Numeric integration produced a non-finite state.
struct NonFiniteStateError : Error {
    NonFiniteStateError(const std::string& msg, long step_)
        : Error(msg + " (step " + std::to_string(step_) + ")"), step(step_) {}
    long step;
};

// analytic_reference only covers free and harmonic Hamiltonians.
struct UnsupportedPotentialError : Error {
    using Error::Error;
};

}  // namespace qmech

#endif
