#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvc/monomial.hpp"
#include "gvc/rational.hpp"

namespace gvc {

// degree(0, v) and order(0, v) sentinels. The conventions make
// degree(p*q) = degree(p) + degree(q) and order(p*q) = order(p) + order(q)
// hold without special cases at the call sites that matter.
inline constexpr int neg_infinity = std::numeric_limits<int>::min();
inline constexpr int pos_infinity = std::numeric_limits<int>::max();

// Ordered list of variable names. Polynomials are only compatible when
// their rings compare equal.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars);

    static const Ring& xy();    // the (x, y) ring the operator engine acts on
    static const Ring& t();     // univariate ring for Phi
    static const Ring& dxdy();  // derivation-symbol ring (Dx, Dy)

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Ring&) const = default;

private:
    std::vector<std::string> vars_;
};

// Sparse multivariate polynomial over the rationals, always in canonical
// form: no stored coefficient is zero and terms are kept in graded-lex
// descending order. Immutable in spirit; every operation returns a fresh
// value, so instances are safe to share across threads.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(Ring ring);

    static Polynomial zero(const Ring& ring);
    static Polynomial constant(const Ring& ring, Rational value);
    static Polynomial variable(const Ring& ring, std::string_view name);
    static Polynomial term(const Ring& ring, Monomial m, Rational coeff);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;

    // Least term in the canonical order; used as a falsification witness.
    Polynomial trailing_term() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& scalar) { return lhs *= scalar; }
    friend Polynomial operator*(const Rational& scalar, Polynomial rhs) { return rhs *= scalar; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Monomial& m, const Rational& coeff);
    void check_same_ring(const Polynomial& other) const;

    Ring ring_;
    TermMap terms_;
};

// Binary exponentiation; pow(p, 0) = 1.
Polynomial pow(const Polynomial& p, unsigned k);

// k-th formal partial derivative. An exponent e contributes the factor
// e*(e-1)*...*(e-k+1); terms with e < k vanish.
Polynomial partial(const Polynomial& p, std::size_t var, unsigned k = 1);
Polynomial partial(const Polynomial& p, std::string_view var, unsigned k = 1);

// Max exponent of var over stored terms; neg_infinity for the zero polynomial.
int degree(const Polynomial& p, std::size_t var);
int degree(const Polynomial& p, std::string_view var);

// Min exponent of var over stored terms; pos_infinity for the zero polynomial.
int order(const Polynomial& p, std::size_t var);
int order(const Polynomial& p, std::string_view var);

// Formal substitution var -> value, expanded to canonical form. value must
// live in the same ring as p.
Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& value);

// Evaluate a univariate polynomial at an element of another ring.
Polynomial eval_univariate(const Polynomial& uni, const Polynomial& value);

// Rename-free embedding: maps each variable of p to the same-named variable
// of target (every variable of p's ring must exist there).
Polynomial embed_into(const Polynomial& p, const Ring& target);

// p * coeff * monomial, in one pass.
Polynomial mul_term(const Polynomial& p, const Monomial& m, const Rational& coeff);

} // namespace gvc
