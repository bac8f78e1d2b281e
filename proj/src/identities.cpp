#include "gvc/identities.hpp"

#include "gvc/errors.hpp"
#include "gvc/kernel.hpp"

namespace gvc {

Eq1Report eq1_residual(const PhiSpec& phi, const Polynomial& f, const Polynomial& g)
{
    if (phi.coeff(0) != 0)
        throw NotLocallyNilpotentError(phi.coeff(0));
    if (f.constant_term() != 0)
        throw PreconditionError("f must have zero constant term");
    if (degree(f, std::size_t{1}) > 0)
        throw PreconditionError("f must be a polynomial in x only");
    if (degree(g, std::size_t{0}) > 0)
        throw PreconditionError("g must be a polynomial in y only");

    const Ring& ring = f.ring();
    const std::string& x = ring.name(0);

    const Polynomial P = kernel_element(phi, f, g);
    const Polynomial direct =
        substitute(apply_lambda_power(phi, 2, P * P), x, Polynomial::zero(ring));

    const Rational a1 = f.coeff(Monomial::unit(2).with_exp(0, 1));
    const Rational a2 = f.coeff(Monomial::unit(2).with_exp(0, 2));

    auto ddy = [](const Polynomial& p) { return partial(p, std::size_t{1}, 2); };
    auto phi_of = [&phi](const Polynomial& p) { return apply_phi(phi, p); };

    const Polynomial phi_g = phi_of(g);
    const Polynomial phi2_g = phi_of(phi_g);

    Polynomial transcribed = phi_of(phi_of(ddy(g * g)));   // Phi^2 (g^2)''
    transcribed -= phi_of(ddy(g)) * (4 * a1);              // - 4 a1 Phi(g'')
    transcribed -= phi_of(ddy(g * phi_g)) * Rational(4);   // - 4 Phi((g Phi(g))'')
    transcribed += ddy(phi_g * phi_g) * Rational(2);       // + 2 ((Phi(g))^2)''
    transcribed += ddy(g) * (4 * a2);                      // + 4 a2 g''
    transcribed += ddy(phi_g) * (4 * a1);                  // + 4 a1 (Phi(g))''
    transcribed += ddy(g * phi2_g) * Rational(2);          // + 2 (g Phi^2(g))''

    Eq1Report report{direct, transcribed, direct - transcribed};
    return report;
}

Int eq2_difference(unsigned r)
{
    return factorial(4 * r) * factorial(r) * factorial(r)
           - 6 * factorial(3 * r) * factorial(2 * r) * factorial(r);
}

Int eq2_value(unsigned r)
{
    const Int two_r = factorial(2 * r);
    return eq2_difference(r) + 6 * two_r * two_r * two_r;
}

} // namespace gvc
