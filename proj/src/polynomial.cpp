#include "gvc/polynomial.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "gvc/errors.hpp"

namespace gvc {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars))
{
    if (vars_.empty())
        throw std::logic_error("ring needs at least one variable");
}

const Ring& Ring::xy()
{
    static const Ring r({"x", "y"});
    return r;
}

const Ring& Ring::t()
{
    static const Ring r({"t"});
    return r;
}

const Ring& Ring::dxdy()
{
    static const Ring r({"Dx", "Dy"});
    return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return i;
    return std::nullopt;
}

namespace {

std::size_t require_var(const Ring& ring, std::string_view name)
{
    if (auto i = ring.index_of(name))
        return *i;
    throw UnknownVariableError(std::string(name), 0);
}

} // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::zero(const Ring& ring)
{
    return Polynomial(ring);
}

Polynomial Polynomial::constant(const Ring& ring, Rational value)
{
    Polynomial p(ring);
    if (value != 0)
        p.terms_.emplace(Monomial::unit(ring.size()), std::move(value));
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name)
{
    const std::size_t i = require_var(ring, name);
    Polynomial p(ring);
    p.terms_.emplace(Monomial::unit(ring.size()).with_exp(i, 1), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Ring& ring, Monomial m, Rational coeff)
{
    assert(m.nvars() == ring.size());
    Polynomial p(ring);
    if (coeff != 0)
        p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_term() const
{
    return coeff(Monomial::unit(ring_.size()));
}

Rational Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::trailing_term() const
{
    Polynomial t(ring_);
    if (!terms_.empty()) {
        auto last = terms_.rbegin();
        t.terms_.emplace(last->first, last->second);
    }
    return t;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& other) const
{
    if (!(ring_ == other.ring_))
        throw RingMismatchError("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    lhs.check_same_ring(rhs);
    Polynomial out(lhs.ring_);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(p.ring(), 1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1u;
        if (k > 0)
            base *= base;
    }
    return result;
}

Polynomial partial(const Polynomial& p, std::size_t var, unsigned k)
{
    assert(var < p.ring().size());
    if (k == 0)
        return p;
    Polynomial out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exp(var);
        if (e < static_cast<int>(k))
            continue;
        out += Polynomial::term(p.ring(), m.with_exp(var, e - static_cast<int>(k)),
                                c * Rational(falling_factorial(e, k)));
    }
    return out;
}

Polynomial partial(const Polynomial& p, std::string_view var, unsigned k)
{
    return partial(p, require_var(p.ring(), var), k);
}

int degree(const Polynomial& p, std::size_t var)
{
    assert(var < p.ring().size());
    int d = neg_infinity;
    for (const auto& [m, c] : p.terms())
        if (m.exp(var) > d)
            d = m.exp(var);
    return d;
}

int degree(const Polynomial& p, std::string_view var)
{
    return degree(p, require_var(p.ring(), var));
}

int order(const Polynomial& p, std::size_t var)
{
    assert(var < p.ring().size());
    int o = pos_infinity;
    for (const auto& [m, c] : p.terms())
        if (m.exp(var) < o)
            o = m.exp(var);
    return o;
}

int order(const Polynomial& p, std::string_view var)
{
    return order(p, require_var(p.ring(), var));
}

Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& value)
{
    const std::size_t vi = require_var(p.ring(), var);
    if (!(value.ring() == p.ring()))
        throw RingMismatchError("substitution value lives in a different ring");

    const int max_exp = degree(p, vi);
    if (max_exp <= 0)
        return p; // var does not occur

    // powers[e] = value^e
    std::vector<Polynomial> powers;
    powers.reserve(static_cast<std::size_t>(max_exp) + 1);
    powers.push_back(Polynomial::constant(p.ring(), 1));
    for (int e = 1; e <= max_exp; ++e)
        powers.push_back(powers.back() * value);

    Polynomial out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exp(vi);
        const Polynomial rest = Polynomial::term(p.ring(), m.with_exp(vi, 0), c);
        out += e == 0 ? rest : rest * powers[static_cast<std::size_t>(e)];
    }
    return out;
}

Polynomial eval_univariate(const Polynomial& uni, const Polynomial& value)
{
    if (uni.ring().size() != 1)
        throw PreconditionError("eval_univariate expects a univariate polynomial");
    const int max_exp = degree(uni, std::size_t{0});
    Polynomial out(value.ring());
    if (max_exp == neg_infinity)
        return out;

    std::vector<Polynomial> powers;
    powers.reserve(static_cast<std::size_t>(max_exp) + 1);
    powers.push_back(Polynomial::constant(value.ring(), 1));
    for (int e = 1; e <= max_exp; ++e)
        powers.push_back(powers.back() * value);

    for (const auto& [m, c] : uni.terms())
        out += powers[static_cast<std::size_t>(m.exp(0))] * c;
    return out;
}

Polynomial embed_into(const Polynomial& p, const Ring& target)
{
    std::vector<std::size_t> slot(p.ring().size());
    for (std::size_t i = 0; i < p.ring().size(); ++i) {
        auto j = target.index_of(p.ring().name(i));
        if (!j)
            throw UnknownVariableError(p.ring().name(i), 0);
        slot[i] = *j;
    }
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial em = Monomial::unit(target.size());
        for (std::size_t i = 0; i < p.ring().size(); ++i)
            em = em.with_exp(slot[i], m.exp(i));
        out += Polynomial::term(target, em, c);
    }
    return out;
}

Polynomial mul_term(const Polynomial& p, const Monomial& m, const Rational& coeff)
{
    Polynomial out(p.ring());
    if (coeff == 0)
        return out;
    for (const auto& [pm, pc] : p.terms())
        out += Polynomial::term(p.ring(), pm.times(m), pc * coeff);
    return out;
}

} // namespace gvc
