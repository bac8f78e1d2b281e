#include "gvc/kernel.hpp"

#include "gvc/errors.hpp"

namespace gvc {

namespace {

void require_pure(const Polynomial& p, std::size_t forbidden_var, const char* what)
{
    if (degree(p, forbidden_var) > 0)
        throw PreconditionError(std::string(what));
}

} // namespace

Polynomial kernel_element(const PhiSpec& phi, const Polynomial& f, const Polynomial& g)
{
    if (!(f.ring() == g.ring()))
        throw RingMismatchError("f and g live in different rings");
    require_pure(f, 1, "f must be a polynomial in x only");
    require_pure(g, 0, "g must be a polynomial in y only");
    return exp_shift(phi, +1, f + g);
}

KernelDecomposition classify_kernel(const PhiSpec& phi, const Polynomial& P)
{
    const Polynomial shifted = exp_shift(phi, -1, P);

    for (const auto& [m, c] : shifted.terms()) {
        if (m.exp(0) >= 1 && m.exp(1) >= 1) {
            throw NotInKernelError(Polynomial::term(P.ring(), m, c),
                                   apply(lambda_of(phi), P));
        }
    }

    // Split f(x) + g(y), constants going to g so that f has no constant term.
    Polynomial f(P.ring());
    Polynomial g(P.ring());
    for (const auto& [m, c] : shifted.terms()) {
        if (m.exp(0) >= 1)
            f += Polynomial::term(P.ring(), m, c);
        else
            g += Polynomial::term(P.ring(), m, c);
    }
    return KernelDecomposition{std::move(f), std::move(g)};
}

} // namespace gvc
