#pragma once

#include <optional>
#include <vector>

#include "gvc/diffop.hpp"
#include "gvc/kernel.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

struct CertificateSample {
    int m = 0;
    bool vanished = false;
    std::optional<Polynomial> witness;
};

// Everything needed to reproduce the vanishing threshold for an instance
// (phi, P, Q): the normalization, the classified shape of P in normalized
// coordinates, and the explicit threshold m_star beyond which
// Lambda^m(P^m Q) = 0 is guaranteed. Samples re-verify the first few m.
struct GvcCertificate {
    PhiSpec phi;
    std::optional<Rational> c;    // absent in the q0 != 0 branch
    PhiSpec phi_normalized;
    std::optional<Rational> a1;   // P_normalized = a1*x + g; absent in the q0 != 0 branch
    std::optional<Polynomial> g;
    std::optional<int> d;         // deg g; absent when g = 0 or in the q0 != 0 branch
    std::optional<int> r;         // o(phi_normalized); absent when phi_normalized = 0
    int m_star = 1;
    std::vector<CertificateSample> samples;

    bool all_samples_vanished() const;
};

// Certificate pipeline. q0 != 0: P must be a polynomial in x alone and the
// threshold is deg_y(Q) + 1. q0 = 0: normalize so o(Phi') >= 2 (or Phi' = 0),
// classify the shifted P, require the a1*x + g shape with deg g <= o(Phi'),
// and emit m_star = 1 + max(b + a*rho) over monomials x^a y^b of the
// normalized Q, where rho = o(Phi') (or deg g when Phi' = 0). Vanishing is
// then re-verified for m = m_star .. m_star + m_verify.
//
// Throws HypothesisViolatedError, FormViolatedError, NormalizationError.
GvcCertificate certify(const PhiSpec& phi, const Polynomial& P, const Polynomial& Q,
                       int m_verify);

// Outcome of the linear-form criterion for kernel elements whose square is
// also annihilated: premises Lambda(P) = 0 and Lambda^2(P^2) = 0, conclusion
// P = a1*x + g(y) with deg g <= o(Phi). Requires o(Phi) >= 2 (Phi = 0 counts,
// its order being infinite).
struct FormReport {
    bool lambda_p_vanishes = false;
    bool square_vanishes = false;
    std::optional<Polynomial> lambda_p_witness;
    std::optional<Polynomial> square_witness;   // least term of Lambda^2(P^2)
    std::optional<KernelDecomposition> decomposition; // present iff Lambda(P) = 0
    bool f_is_linear = false;          // shifted f has degree <= 1
    bool g_degree_within_order = false; // deg g <= o(Phi)
    std::optional<Rational> a1;        // present iff P = a1*x + g exactly

    bool premises_hold() const { return lambda_p_vanishes && square_vanishes; }
    bool conclusion_holds() const { return f_is_linear && g_degree_within_order; }
};

FormReport form_check(const PhiSpec& phi, const Polynomial& P);

} // namespace gvc
