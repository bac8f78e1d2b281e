#include "gvc/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gvc {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps))
{
    assert(std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; }));
}

Monomial Monomial::unit(std::size_t nvars)
{
    return Monomial(std::vector<int>(nvars, 0));
}

int Monomial::total_degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_unit() const
{
    for (int e : exps_)
        if (e != 0)
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const
{
    assert(exps_.size() == other.exps_.size());
    std::vector<int> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::with_exp(std::size_t i, int value) const
{
    std::vector<int> out = exps_;
    out[i] = value;
    return Monomial(std::move(out));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    assert(a.nvars() == b.nvars());
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db)
        return da > db;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i))
            return a.exp(i) > b.exp(i);
    return false;
}

} // namespace gvc
