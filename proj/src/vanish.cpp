#include "gvc/vanish.hpp"

#include "gvc/errors.hpp"

namespace gvc {

namespace {

VanishReport run_checks(const PhiSpec& phi, const Polynomial& P, const Polynomial* Q, int m_max)
{
    if (m_max < 1)
        throw PreconditionError("m_max must be at least 1");

    VanishReport report;
    report.m_max = m_max;

    Polynomial p_power = Polynomial::constant(P.ring(), 1);
    int last_failure = 0;
    for (int m = 1; m <= m_max; ++m) {
        p_power *= P; // incremental P^m
        const Polynomial value =
            apply_lambda_power(phi, static_cast<unsigned>(m), Q ? p_power * *Q : p_power);

        VanishEntry entry;
        entry.vanished = value.is_zero();
        if (!entry.vanished) {
            entry.witness = value.trailing_term();
            if (!report.first_failure)
                report.first_failure = m;
            last_failure = m;
        }
        report.results.emplace(m, std::move(entry));
    }
    report.empirical_threshold = last_failure + 1;
    return report;
}

} // namespace

VanishReport check_hypothesis(const PhiSpec& phi, const Polynomial& P, int m_max)
{
    return run_checks(phi, P, nullptr, m_max);
}

VanishReport check_conclusion(const PhiSpec& phi, const Polynomial& P, const Polynomial& Q,
                              int m_max)
{
    return run_checks(phi, P, &Q, m_max);
}

bool hypothesis_holds(const PhiSpec& phi, const Polynomial& P, int m_max)
{
    Polynomial p_power = Polynomial::constant(P.ring(), 1);
    for (int m = 1; m <= m_max; ++m) {
        p_power *= P;
        if (!apply_lambda_power(phi, static_cast<unsigned>(m), p_power).is_zero())
            return false;
    }
    return true;
}

} // namespace gvc
