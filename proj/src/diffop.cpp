#include "gvc/diffop.hpp"

#include <cassert>

#include "gvc/errors.hpp"

namespace gvc {

DiffOperator::DiffOperator() : symbol_(Ring::dxdy()) {}

DiffOperator::DiffOperator(Polynomial symbol) : symbol_(std::move(symbol))
{
    if (!(symbol_.ring() == Ring::dxdy()))
        throw RingMismatchError("operator symbols must live in the (Dx, Dy) ring");
}

DiffOperator DiffOperator::identity()
{
    return DiffOperator(Polynomial::constant(Ring::dxdy(), 1));
}

DiffOperator DiffOperator::dx()
{
    return DiffOperator(Polynomial::variable(Ring::dxdy(), "Dx"));
}

DiffOperator DiffOperator::dy()
{
    return DiffOperator(Polynomial::variable(Ring::dxdy(), "Dy"));
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& rhs)
{
    symbol_ += rhs.symbol_;
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& rhs)
{
    symbol_ -= rhs.symbol_;
    return *this;
}

DiffOperator& DiffOperator::operator*=(const DiffOperator& rhs)
{
    symbol_ *= rhs.symbol_;
    return *this;
}

DiffOperator DiffOperator::operator-() const
{
    return DiffOperator(-symbol_);
}

DiffOperator op_pow(const DiffOperator& op, unsigned m)
{
    return DiffOperator(pow(op.symbol(), m));
}

Polynomial apply(const DiffOperator& op, const Polynomial& p)
{
    if (p.ring().size() != 2)
        throw RingMismatchError("operators act on two-variable polynomials");
    Polynomial out(p.ring());
    for (const auto& [m, c] : op.symbol().terms()) {
        const unsigned i = static_cast<unsigned>(m.exp(0));
        const unsigned j = static_cast<unsigned>(m.exp(1));
        Polynomial d = partial(partial(p, std::size_t{1}, j), std::size_t{0}, i);
        if (!d.is_zero())
            out += d * c;
    }
    return out;
}

PhiSpec::PhiSpec() : phi_(Ring::t()) {}

PhiSpec::PhiSpec(Polynomial phi) : phi_(std::move(phi))
{
    if (phi_.ring().size() != 1)
        throw PreconditionError("Phi must be univariate");
}

int PhiSpec::order() const
{
    return gvc::order(phi_, std::size_t{0});
}

int PhiSpec::degree() const
{
    return gvc::degree(phi_, std::size_t{0});
}

Rational PhiSpec::coeff(unsigned k) const
{
    return phi_.coeff(Monomial::unit(1).with_exp(0, static_cast<int>(k)));
}

DiffOperator lambda_of(const PhiSpec& phi)
{
    const Polynomial dx = Polynomial::variable(Ring::dxdy(), "Dx");
    const Polynomial dy = Polynomial::variable(Ring::dxdy(), "Dy");
    return DiffOperator((dx - eval_univariate(phi.poly(), dy)) * dy);
}

Polynomial apply_phi(const PhiSpec& phi, const Polynomial& p)
{
    Polynomial out(p.ring());
    if (phi.is_zero() || p.is_zero())
        return out;
    // Walk Phi's exponents in increasing order, deriving incrementally.
    struct Step {
        int exp;
        Rational coeff;
    };
    std::vector<Step> steps;
    for (auto it = phi.poly().terms().rbegin(); it != phi.poly().terms().rend(); ++it)
        steps.push_back({it->first.exp(0), it->second});

    Polynomial d = p;
    int reached = 0;
    for (const Step& s : steps) {
        d = partial(d, std::size_t{1}, static_cast<unsigned>(s.exp - reached));
        reached = s.exp;
        if (d.is_zero())
            break;
        out += d * s.coeff;
    }
    return out;
}

Polynomial exp_shift(const PhiSpec& phi, int sign, const Polynomial& p)
{
    if (sign != 1 && sign != -1)
        throw PreconditionError("exp_shift sign must be +1 or -1");
    if (phi.coeff(0) != 0)
        throw NotLocallyNilpotentError(phi.coeff(0));
    if (p.ring().size() != 2)
        throw RingMismatchError("exp_shift acts on two-variable polynomials");

    Polynomial acc = p;
    Polynomial cur = p;
    Rational k_factorial = 1;
    // Each Phi(Dy) application drops deg_y by at least o(Phi) >= 1, so the
    // loop stops after at most floor(deg_y(p) / o(Phi)) rounds.
    for (int k = 1;; ++k) {
        cur = apply_phi(phi, cur);
        if (cur.is_zero())
            break;
        k_factorial *= k;
        const Monomial xk = Monomial::unit(2).with_exp(0, k);
        Rational scale = Rational(1) / k_factorial;
        if (sign < 0 && (k & 1))
            scale = -scale;
        acc += mul_term(cur, xk, scale);
    }
    return acc;
}

Polynomial apply_lambda_power(const PhiSpec& phi, unsigned m, const Polynomial& p)
{
    if (p.ring().size() != 2)
        throw RingMismatchError("operators act on two-variable polynomials");
    // Dy^m first: terms with deg_y < m never reach the binomial expansion.
    Polynomial h = partial(p, std::size_t{1}, m);
    Polynomial acc(p.ring());
    if (h.is_zero())
        return acc;

    // (Dx - Phi(Dy))^m = sum_i (-1)^i C(m,i) Dx^{m-i} Phi(Dy)^i, all factors
    // commuting.
    Polynomial cur = h;
    for (unsigned i = 0; i <= m; ++i) {
        if (i > 0) {
            cur = apply_phi(phi, cur);
            if (cur.is_zero())
                break;
        }
        Polynomial d = partial(cur, std::size_t{0}, m - i);
        if (d.is_zero())
            continue;
        Rational coeff{binomial(m, i)};
        if (i & 1u)
            coeff = -coeff;
        acc += d * coeff;
    }
    return acc;
}

Normalization normalize_phi(const PhiSpec& phi)
{
    if (phi.coeff(0) != 0)
        throw PreconditionError("normalization requires q0 = 0");
    const Rational c = -phi.coeff(1);
    Polynomial adjusted =
        phi.poly() + Polynomial::term(phi.poly().ring(), Monomial::unit(1).with_exp(0, 1), c);
    return Normalization{PhiSpec(std::move(adjusted)), c};
}

Polynomial coord_change(const Polynomial& p, const Rational& c)
{
    if (c == 0)
        return p;
    if (p.ring().size() != 2)
        throw RingMismatchError("coordinate change acts on two-variable polynomials");
    const std::string& x = p.ring().name(0);
    const std::string& y = p.ring().name(1);
    const Polynomial target = Polynomial::variable(p.ring(), y) + Polynomial::variable(p.ring(), x) * c;
    return substitute(p, y, target);
}

} // namespace gvc
