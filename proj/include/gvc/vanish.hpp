#pragma once

#include <map>
#include <optional>

#include "gvc/diffop.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

struct VanishEntry {
    bool vanished = false;
    std::optional<Polynomial> witness; // least nonzero term when not vanished
};

// Per-m outcome of Lambda^m(P^m * Q) = 0 checks over m = 1..m_max.
struct VanishReport {
    int m_max = 0;
    std::map<int, VanishEntry> results;
    std::optional<int> first_failure;
    // Least m0 such that every checked m in [m0, m_max] vanishes; m_max + 1
    // when the last checked m fails.
    int empirical_threshold = 1;

    bool all_vanished() const { return !first_failure.has_value(); }
};

// Lambda^m(P^m) for m = 1..m_max, exact, with incremental powers
// P^m = P^{m-1} * P reused across the loop.
VanishReport check_hypothesis(const PhiSpec& phi, const Polynomial& P, int m_max);

// Lambda^m(P^m * Q) for m = 1..m_max.
VanishReport check_conclusion(const PhiSpec& phi, const Polynomial& P, const Polynomial& Q,
                              int m_max);

// Early-exit variant used by the search: stops at the first failing m.
bool hypothesis_holds(const PhiSpec& phi, const Polynomial& P, int m_max);

} // namespace gvc
