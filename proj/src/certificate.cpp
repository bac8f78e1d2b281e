#include "gvc/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "gvc/errors.hpp"
#include "gvc/vanish.hpp"

namespace gvc {

bool GvcCertificate::all_samples_vanished() const
{
    return std::all_of(samples.begin(), samples.end(),
                       [](const CertificateSample& s) { return s.vanished; });
}

namespace {

std::vector<CertificateSample> verify_samples(const PhiSpec& phi, const Polynomial& P,
                                              const Polynomial& Q, int m_star, int m_verify)
{
    std::vector<CertificateSample> samples;
    samples.reserve(static_cast<std::size_t>(m_verify) + 1);
    Polynomial p_power = pow(P, static_cast<unsigned>(m_star - 1));
    for (int m = m_star; m <= m_star + m_verify; ++m) {
        p_power *= P;
        const Polynomial value = apply_lambda_power(phi, static_cast<unsigned>(m), p_power * Q);
        CertificateSample sample;
        sample.m = m;
        sample.vanished = value.is_zero();
        if (!sample.vanished)
            sample.witness = value.trailing_term();
        samples.push_back(std::move(sample));
    }
    return samples;
}

} // namespace

GvcCertificate certify(const PhiSpec& phi, const Polynomial& P, const Polynomial& Q, int m_verify)
{
    if (m_verify < 0)
        throw PreconditionError("m_verify must be non-negative");

    GvcCertificate cert;
    cert.phi = phi;

    if (phi.coeff(0) != 0) {
        // Only P in K[x] lies in the kernel here, and then Dy^m alone kills
        // P^m Q once m exceeds deg_y(Q).
        if (degree(P, std::size_t{1}) > 0)
            throw NormalizationError(apply(lambda_of(phi), P));
        cert.phi_normalized = phi;
        cert.r = phi.order(); // = 0
        const int b = degree(Q, std::size_t{1});
        cert.m_star = b >= 0 ? b + 1 : 1;
        cert.samples = verify_samples(phi, P, Q, cert.m_star, m_verify);
        return cert;
    }

    const Polynomial lambda_p = apply_lambda_power(phi, 1, P);
    if (!lambda_p.is_zero())
        throw HypothesisViolatedError(1, lambda_p.trailing_term());

    const Normalization norm = normalize_phi(phi);
    cert.c = norm.c;
    cert.phi_normalized = norm.phi_prime;
    const Polynomial p_normalized = coord_change(P, norm.c);
    const Polynomial q_normalized = coord_change(Q, norm.c);

    // Cannot fail: Lambda'(P') is the coordinate image of Lambda(P) = 0.
    const KernelDecomposition dec = classify_kernel(norm.phi_prime, p_normalized);

    const int r = norm.phi_prime.order(); // >= 2, or pos_infinity for Phi' = 0
    const int d = degree(dec.g, std::size_t{1});

    const bool f_linear = degree(dec.f, std::size_t{0}) <= 1;
    const bool degree_ok = norm.phi_prime.is_zero() || d <= r;
    if (!f_linear || !degree_ok) {
        std::string reason;
        if (!f_linear)
            reason = "f is not linear in x";
        if (!degree_ok)
            reason += std::string(reason.empty() ? "" : "; ") + "deg g exceeds o(Phi)";
        throw FormViolatedError(std::move(reason), apply_lambda_power(phi, 2, P * P), dec.f,
                                dec.g);
    }

    // Follows from the form just checked; verified anyway.
    const Polynomial square = apply_lambda_power(phi, 2, P * P);
    if (!square.is_zero())
        throw HypothesisViolatedError(2, square.trailing_term());

    // P' = a1*x + g exactly (the x-part absorbs x*Phi'(g) when deg g = r).
    const Polynomial linear_part = p_normalized - dec.g;
    const Monomial x_mono = Monomial::unit(2).with_exp(0, 1);
    const Rational a1 = linear_part.coeff(x_mono);
    if (!(linear_part == Polynomial::term(P.ring(), x_mono, a1)))
        throw std::logic_error("classified kernel element is not of the form a1*x + g");
    cert.a1 = a1;
    cert.g = dec.g;
    if (d >= 0)
        cert.d = d;
    if (!norm.phi_prime.is_zero())
        cert.r = r;

    // Per-monomial threshold b + a*rho over the normalized Q. rho is the
    // y-degree each P-factor can contribute back against Dy^m: o(Phi') in
    // general, deg g when Phi' = 0.
    const int rho = norm.phi_prime.is_zero() ? std::max(d, 0) : r;
    int worst = 0;
    for (const auto& [m, c] : q_normalized.terms())
        worst = std::max(worst, m.exp(1) + m.exp(0) * rho);
    cert.m_star = q_normalized.is_zero() ? 1 : worst + 1;

    cert.samples = verify_samples(phi, P, Q, cert.m_star, m_verify);
    return cert;
}

FormReport form_check(const PhiSpec& phi, const Polynomial& P)
{
    if (phi.order() < 2)
        throw PreconditionError("form check requires o(Phi) >= 2");

    FormReport report;
    const Polynomial lambda_p = apply_lambda_power(phi, 1, P);
    report.lambda_p_vanishes = lambda_p.is_zero();
    if (!report.lambda_p_vanishes)
        report.lambda_p_witness = lambda_p.trailing_term();

    const Polynomial square = apply_lambda_power(phi, 2, P * P);
    report.square_vanishes = square.is_zero();
    if (!report.square_vanishes)
        report.square_witness = square.trailing_term();

    if (report.lambda_p_vanishes) {
        KernelDecomposition dec = classify_kernel(phi, P);
        report.f_is_linear = degree(dec.f, std::size_t{0}) <= 1;
        report.g_degree_within_order = degree(dec.g, std::size_t{1}) <= phi.order();
        // a1 is the coefficient in P = a1*x + g itself (the shifted f can
        // differ from it by the constant Phi(Dy) g when deg g = o(Phi)), and
        // is only reported when P has exactly that shape.
        const Polynomial linear_part = P - dec.g;
        const Monomial x_mono = Monomial::unit(2).with_exp(0, 1);
        const Rational a1 = linear_part.coeff(x_mono);
        if (linear_part == Polynomial::term(P.ring(), x_mono, a1))
            report.a1 = a1;
        report.decomposition = std::move(dec);
    }
    return report;
}

} // namespace gvc
