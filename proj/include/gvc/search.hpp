#pragma once

#include <cstdint>
#include <vector>

#include "gvc/diffop.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

struct SearchOptions {
    int max_deg_x = 2;
    int max_deg_y = 2;
    std::vector<int> coeff_pool = {-1, 0, 1};
    int m_max = 6;
    // 0 = exhaustive. When the grid is larger than this limit, that many
    // candidates are sampled with the seeded generator instead.
    std::uint64_t max_candidates = 0;
    std::uint64_t seed = 0;
};

struct SearchFailure {
    Polynomial P;
    Polynomial Q;    // monomial from the fixed test basis
    int failing_m = 0;
};

struct SearchResult {
    std::uint64_t candidates = 0;          // total grid size (or sample count)
    std::uint64_t hypothesis_survivors = 0;
    bool exhaustive = true;
    std::vector<SearchFailure> failures;
};

// Sweeps coefficient assignments for P over the monomial grid
// {x^a y^b : a <= max_deg_x, b <= max_deg_y}. Candidates passing the
// hypothesis check up to m_max are classified and run against the fixed
// basis Q in {x^a y^b : a, b <= 2}; a conclusion failure beyond the
// certified vanishing threshold of the survivor's shape is recorded. Every
// recorded failure would falsify that threshold, so the list is expected to
// stay empty. Requires 1 <= o(Phi) < infinity.
SearchResult counterexample_search(const PhiSpec& phi, const SearchOptions& options);

} // namespace gvc
