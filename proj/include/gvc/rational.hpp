#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gvc {

// Exact arithmetic only. cpp_rational keeps every value in lowest terms with
// a positive denominator, so value equality is representation equality and
// zero is always 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// n * (n-1) * ... * (n-k+1); returns 1 for k = 0.
Int falling_factorial(int n, unsigned k);

// "3", "-1/2": the coefficient syntax used by the expression grammar.
std::string format_rational(const Rational& q);

// "num/den" with the denominator always spelled out, for JSON payloads.
std::string format_rational_pair(const Rational& q);

} // namespace gvc
