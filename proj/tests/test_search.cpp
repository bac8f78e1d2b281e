#include <doctest.h>

#include "gvc/errors.hpp"
#include "gvc/search.hpp"
#include "gvc/text.hpp"
#include "support/build.hpp"

using namespace gvc;
using build::phi;

TEST_CASE("constants always pass")
{
    SearchOptions opt;
    opt.max_deg_x = 0;
    opt.max_deg_y = 0;
    opt.m_max = 4;
    const SearchResult result = counterexample_search(phi("t^2"), opt);
    CHECK(result.candidates == 3);
    CHECK(result.hypothesis_survivors == 3);
    CHECK(result.failures.empty());
    CHECK(result.exhaustive);
}

TEST_CASE("singleton pool")
{
    SearchOptions opt;
    opt.coeff_pool = {0};
    opt.m_max = 3;
    const SearchResult result = counterexample_search(phi("t^2"), opt);
    CHECK(result.candidates == 1);
    CHECK(result.hypothesis_survivors == 1); // P = 0 passes
    CHECK(result.failures.empty());
}

TEST_CASE("small exhaustive sweep finds nothing")
{
    SearchOptions opt;
    opt.max_deg_x = 1;
    opt.max_deg_y = 1;
    opt.m_max = 4;
    const SearchResult result = counterexample_search(phi("t^2"), opt);
    CHECK(result.candidates == 81);
    CHECK(result.failures.empty());
}

TEST_CASE("sampled mode is deterministic for a fixed seed")
{
    SearchOptions opt;
    opt.max_deg_x = 2;
    opt.max_deg_y = 2;
    opt.m_max = 3;
    opt.max_candidates = 40;
    opt.seed = 12345;
    const SearchResult a = counterexample_search(phi("t^2"), opt);
    const SearchResult b = counterexample_search(phi("t^2"), opt);
    CHECK(a.candidates == b.candidates);
    CHECK(a.hypothesis_survivors == b.hypothesis_survivors);
    CHECK(a.failures.size() == b.failures.size());
    CHECK_FALSE(a.exhaustive);
}

TEST_CASE("order preconditions")
{
    SearchOptions opt;
    CHECK_THROWS_AS(counterexample_search(PhiSpec(), opt), PreconditionError);
    CHECK_THROWS_AS(counterexample_search(phi("1 + t"), opt), PreconditionError);
    opt.coeff_pool.clear();
    CHECK_THROWS_AS(counterexample_search(phi("t^2"), opt), PreconditionError);
}
