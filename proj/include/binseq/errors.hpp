#pragma once

#include <stdexcept>
#include <string>

namespace binseq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (bad number, missing column, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// Data violates an invariant (y_t > m_t, bad lag set, bad flag value, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Regression design is unusable (rank-deficient X).
class DesignError : public Error {
public:
    using Error::Error;
};

// Optimizer failed to converge. Carries the last iterate so callers can
// inspect where it stalled.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, std::vector<double> last)
        : Error(msg), last_iterate(std::move(last)) {}
    std::vector<double> last_iterate;
};

// Complete or quasi-complete separation in a logistic fit.
class SeparationError : public Error {
public:
    using Error::Error;
};

// Non-finite intermediate, non-PSD matrix, or similar numeric breakdown.
class NumericError : public Error {
public:
    using Error::Error;
};

// Parameter outside its admissible region (root condition violated, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Singular information / Schur complement.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Degenerate statistic input (all residuals zero, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
};

}  // namespace binseq
