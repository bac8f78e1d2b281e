#pragma once

#include "gvc/polynomial.hpp"

namespace gvc {

// Constant-coefficient differential operator on the (x, y) ring, stored as a
// polynomial in the derivation symbols Dx, Dy. Constant coefficients make
// composition commutative: it is plain symbol-polynomial multiplication.
class DiffOperator {
public:
    DiffOperator();                          // the zero operator
    explicit DiffOperator(Polynomial symbol); // symbol must live in Ring::dxdy()

    static DiffOperator identity();
    static DiffOperator dx();
    static DiffOperator dy();

    const Polynomial& symbol() const { return symbol_; }
    bool is_zero() const { return symbol_.is_zero(); }

    DiffOperator& operator+=(const DiffOperator& rhs);
    DiffOperator& operator-=(const DiffOperator& rhs);
    DiffOperator& operator*=(const DiffOperator& rhs); // composition

    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(DiffOperator a, const DiffOperator& b) { return a *= b; }
    DiffOperator operator-() const;

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

private:
    Polynomial symbol_;
};

DiffOperator op_pow(const DiffOperator& op, unsigned m);

// Linear action: the symbol monomial Dx^i*Dy^j sends p to d^i/dx^i d^j/dy^j p.
// p must live in a two-variable ring (first variable x-like, second y-like).
Polynomial apply(const DiffOperator& op, const Polynomial& p);

// The univariate polynomial Phi(t) = q0 + q1 t + ... + qs t^s together with
// its derived order r = o(Phi), the least exponent with nonzero coefficient.
class PhiSpec {
public:
    PhiSpec(); // Phi = 0
    explicit PhiSpec(Polynomial phi); // any univariate ring

    const Polynomial& poly() const { return phi_; }
    bool is_zero() const { return phi_.is_zero(); }

    int order() const;  // pos_infinity for Phi = 0
    int degree() const; // neg_infinity for Phi = 0
    Rational coeff(unsigned k) const;

    friend bool operator==(const PhiSpec&, const PhiSpec&) = default;

private:
    Polynomial phi_;
};

// Lambda = (Dx - Phi(Dy)) * Dy.
DiffOperator lambda_of(const PhiSpec& phi);

// Phi(Dy) applied to p: sum of q_k d^k/dy^k p.
Polynomial apply_phi(const PhiSpec& phi, const Polynomial& p);

// The exponential shift e^{sign * x * Phi(Dy)} as a terminating series
//   sum_k (sign*x)^k Phi(Dy)^k(p) / k!.
// Requires q0 = 0 so that Phi(Dy) strictly lowers deg_y and the series stops
// after at most floor(deg_y(p) / r) steps. sign is +1 or -1, and the two
// signs are mutually inverse maps.
Polynomial exp_shift(const PhiSpec& phi, int sign, const Polynomial& p);

// Lambda^m = (Dx - Phi(Dy))^m Dy^m with Dy^m applied first, so terms of p
// with deg_y < m die before the binomial expansion is touched. This is the
// engine's hot path; apply(op_pow(lambda_of(phi), m), p) computes the same
// value the slow way.
Polynomial apply_lambda_power(const PhiSpec& phi, unsigned m, const Polynomial& p);

struct Normalization {
    PhiSpec phi_prime;
    Rational c;
};

// Kills Phi's linear term: c = -q1 and Phi'(t) = Phi(t) + c*t, so that
// o(Phi') >= 2 or Phi' = 0. The companion substitution y -> y + c*x
// (coord_change) intertwines the operators exactly:
//   apply(lambda_of(phi'), coord_change(p, c)) = coord_change(apply(lambda_of(phi), p), c).
// Requires q0 = 0.
Normalization normalize_phi(const PhiSpec& phi);

// substitute(p, y, y + c*x). Multiplicative, and inverted by c -> -c.
Polynomial coord_change(const Polynomial& p, const Rational& c);

} // namespace gvc
