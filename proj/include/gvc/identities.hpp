#pragma once

#include "gvc/diffop.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// Two routes to the x = 0 slice of Lambda^2(P^2) for P = e^{x*Phi(Dy)}(f+g):
// `direct` expands everything from first principles, `transcribed` evaluates
// the closed-form combination of g, a1, a2 term by term as written:
//   Phi^2((g^2)'') - 4*a1*Phi(g'') - 4*Phi((g*Phi(g))'') + 2*((Phi(g))^2)''
//   + 4*a2*g'' + 4*a1*(Phi(g))'' + 2*(g*Phi^2(g))''
// with ' = d/dy and Phi(h) = Phi(Dy) h. The residual is their difference;
// the direct route is authoritative and a nonzero residual is reported, not
// treated as an error. Requires q0 = 0 and f without constant term.
struct Eq1Report {
    Polynomial direct;
    Polynomial transcribed;
    Polynomial residual;
};

Eq1Report eq1_residual(const PhiSpec& phi, const Polynomial& f, const Polynomial& g);

// (4r)! r! r! - 6 (3r)! (2r)! r! + 6 ((2r)!)^3, exactly.
Int eq2_value(unsigned r);

// The first two terms alone: (4r)! r! r! - 6 (3r)! (2r)! r!.
Int eq2_difference(unsigned r);

} // namespace gvc
