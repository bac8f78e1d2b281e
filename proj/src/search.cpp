#include "gvc/search.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "gvc/errors.hpp"
#include "gvc/kernel.hpp"
#include "gvc/vanish.hpp"

namespace gvc {

namespace {

Polynomial build_candidate(const Ring& ring, const std::vector<Monomial>& slots,
                           const std::vector<int>& pool, const std::vector<std::size_t>& digits)
{
    Polynomial p(ring);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const int c = pool[digits[i]];
        if (c != 0)
            p += Polynomial::term(ring, slots[i], Rational(c));
    }
    return p;
}

// Vanishing threshold guaranteed for a classified survivor, per normalized
// Q-monomial x^a y^b. Two certified shapes exist for kernel elements whose
// square is also annihilated:
//   A. f = a1*x with deg g <= o(Phi'): each P-factor feeds back at most
//      deg g in y against Dy^m, so m > b + a*deg(g).
//   B. g linear: only the g^m term survives Dy^m, so m > a + deg(f)*b
//      (and m > a + floor(b/r) when f is constant).
// A survivor outside both shapes has no certified bound and is never
// flagged; a bounded sweep cannot falsify anything about it.
struct SurvivorBounds {
    bool family_a = false;
    bool family_b = false;
    int d_hat = 0; // max(deg g, 0)
    int s_hat = 0; // max(deg f, 0)
    std::optional<int> r; // o(Phi'), absent when Phi' = 0

    std::optional<int> threshold(int a, int b) const
    {
        std::optional<int> best;
        if (family_a)
            best = b + a * d_hat;
        if (family_b) {
            const int tb = s_hat >= 1 ? a + s_hat * b : a + (r ? b / *r : 0);
            if (!best || tb < *best)
                best = tb;
        }
        return best;
    }
};

SurvivorBounds classify_survivor(const PhiSpec& phi_normalized, const Polynomial& p_normalized)
{
    const KernelDecomposition dec = classify_kernel(phi_normalized, p_normalized);
    const int d = degree(dec.g, std::size_t{1});
    const int s = degree(dec.f, std::size_t{0});
    const int r = phi_normalized.order();

    SurvivorBounds bounds;
    bounds.d_hat = std::max(d, 0);
    bounds.s_hat = std::max(s, 0);
    if (r != pos_infinity)
        bounds.r = r;
    bounds.family_a = s <= 1 && (phi_normalized.is_zero() || d <= r);
    bounds.family_b = d <= 1;
    return bounds;
}

} // namespace

SearchResult counterexample_search(const PhiSpec& phi, const SearchOptions& options)
{
    const int r = phi.order();
    if (r < 1 || r == pos_infinity)
        throw PreconditionError("search requires 1 <= o(Phi) < infinity");
    if (options.coeff_pool.empty())
        throw PreconditionError("coefficient pool must be non-empty");
    if (options.max_deg_x < 0 || options.max_deg_y < 0)
        throw PreconditionError("degree bounds must be non-negative");
    if (options.m_max < 1)
        throw PreconditionError("m_max must be at least 1");

    const Ring& ring = Ring::xy();
    std::vector<Monomial> slots;
    for (int a = 0; a <= options.max_deg_x; ++a)
        for (int b = 0; b <= options.max_deg_y; ++b)
            slots.push_back(Monomial::unit(2).with_exp(0, a).with_exp(1, b));

    const std::size_t pool_size = options.coeff_pool.size();
    std::uint64_t total = 1;
    bool total_overflow = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (total > std::uint64_t{1} << 50) {
            total_overflow = true;
            break;
        }
        total *= pool_size;
    }

    const bool sample = options.max_candidates > 0
                        && (total_overflow || total > options.max_candidates);
    if (!sample && (total_overflow || total > std::uint64_t{100'000'000}))
        throw PreconditionError("search space too large for exhaustive sweep; set max_candidates");

    const Normalization norm = normalize_phi(phi);

    // Fixed conclusion basis Q = x^a y^b, a, b <= 2, with thresholds taken in
    // normalized coordinates.
    struct BasisEntry {
        Monomial q;
        Polynomial q_normalized;
    };
    std::vector<BasisEntry> q_basis;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            const Monomial q = Monomial::unit(2).with_exp(0, a).with_exp(1, b);
            q_basis.push_back(
                {q, coord_change(Polynomial::term(ring, q, Rational(1)), norm.c)});
        }

    SearchResult result;
    result.exhaustive = !sample;
    result.candidates = sample ? options.max_candidates : total;

    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> digits(slots.size(), 0);

    for (std::uint64_t n = 0; n < result.candidates; ++n) {
        if (sample) {
            for (auto& d : digits)
                d = static_cast<std::size_t>(rng() % pool_size);
        } else if (n > 0) {
            // odometer step
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (++digits[i] < pool_size)
                    break;
                digits[i] = 0;
            }
        }

        const Polynomial P = build_candidate(ring, slots, options.coeff_pool, digits);
        if (!hypothesis_holds(phi, P, options.m_max))
            continue;
        ++result.hypothesis_survivors;

        const SurvivorBounds bounds =
            classify_survivor(norm.phi_prime, coord_change(P, norm.c));

        std::vector<Polynomial> powers;
        powers.reserve(static_cast<std::size_t>(options.m_max));
        Polynomial p_power = Polynomial::constant(ring, 1);
        for (int m = 1; m <= options.m_max; ++m) {
            p_power *= P;
            powers.push_back(p_power);
        }

        bool failed = false;
        for (const BasisEntry& entry : q_basis) {
            // worst threshold over the monomials of the transported Q
            std::optional<int> threshold;
            for (const auto& [qm, qc] : entry.q_normalized.terms()) {
                const auto t = bounds.threshold(qm.exp(0), qm.exp(1));
                if (!t) {
                    threshold.reset();
                    break;
                }
                if (!threshold || *t > *threshold)
                    threshold = *t;
            }
            if (!threshold)
                continue; // no certified bound for this survivor

            for (int m = *threshold + 1; m <= options.m_max && !failed; ++m) {
                const Polynomial value = apply_lambda_power(
                    phi, static_cast<unsigned>(m),
                    mul_term(powers[static_cast<std::size_t>(m - 1)], entry.q, Rational(1)));
                if (!value.is_zero()) {
                    result.failures.push_back(
                        SearchFailure{P, Polynomial::term(ring, entry.q, Rational(1)), m});
                    failed = true;
                }
            }
            if (failed)
                break;
        }
    }
    return result;
}

} // namespace gvc
