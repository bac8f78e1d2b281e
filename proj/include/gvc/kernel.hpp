#pragma once

#include "gvc/diffop.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// W = f(x) + g(y) with f carrying no constant term; constants live in g.
struct KernelDecomposition {
    Polynomial f;
    Polynomial g;
};

// P = e^{x*Phi(Dy)}(f + g), a kernel element of Lambda by construction.
// f must be a polynomial in x only, g in y only, both in the (x, y) ring.
// Requires q0 = 0.
Polynomial kernel_element(const PhiSpec& phi, const Polynomial& f, const Polynomial& g);

// Inverse direction: shifts P back by e^{-x*Phi(Dy)} and splits the result
// into f(x) + g(y). A surviving mixed term x^a y^b (a, b >= 1) proves P is
// not in the kernel; the error carries that term and the nonzero Lambda(P).
KernelDecomposition classify_kernel(const PhiSpec& phi, const Polynomial& P);

} // namespace gvc
