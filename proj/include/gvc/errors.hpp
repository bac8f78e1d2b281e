#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gvc/polynomial.hpp"

namespace gvc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct UnknownVariableError : Error {
    UnknownVariableError(std::string variable, std::size_t position);
    std::string variable;
    std::size_t position; // 1-based column; 0 when not tied to source text
};

// Parse failure with a 1-based column into the original input. End of input
// reports the column one past the last character.
struct SyntaxError : Error {
    SyntaxError(std::size_t position, std::string expected, std::string found);
    std::size_t position;
    std::string expected;
    std::string found;
};

// e^{x*Phi(Dy)} maps polynomials to polynomials only when Phi has zero
// constant term; raised when q0 != 0.
struct NotLocallyNilpotentError : Error {
    explicit NotLocallyNilpotentError(Rational q0);
    Rational q0;
};

struct NotInKernelError : Error {
    NotInKernelError(Polynomial mixed_term, Polynomial lambda_p);
    Polynomial mixed_term; // offending mixed term of the shifted polynomial
    Polynomial lambda_p;   // nonzero Lambda(P), the falsification witness
};

struct PreconditionError : Error {
    using Error::Error;
};

struct HypothesisViolatedError : Error {
    HypothesisViolatedError(int m, Polynomial witness_term);
    int m;
    Polynomial witness_term;
};

struct FormViolatedError : Error {
    FormViolatedError(std::string reason, Polynomial square_value, Polynomial f, Polynomial g);
    std::string reason;
    Polynomial square_value; // Lambda^2(P^2), reported alongside the failure
    Polynomial f;
    Polynomial g;
};

// q0 != 0 and P depends on y: the instance cannot be brought into the
// certifiable family.
struct NormalizationError : Error {
    explicit NormalizationError(Polynomial lambda_p);
    Polynomial lambda_p;
};

} // namespace gvc
