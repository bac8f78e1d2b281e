#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gvc/polynomial.hpp"
#include "gvc/rational.hpp"

// Independent reference arithmetic used as an oracle against the engine.
// Everything here is written against a plain exponent-pair map and its own
// loops, sharing no code path with gvc::Polynomial operations.
namespace naive {

using Key = std::pair<int, int>; // (x exponent, y exponent)
using Poly = std::map<Key, gvc::Rational>;

inline Poly from(const gvc::Polynomial& p)
{
    Poly out;
    for (const auto& [m, c] : p.terms())
        out[{m.exp(0), m.exp(1)}] = c;
    return out;
}

inline void set(Poly& p, Key k, const gvc::Rational& c)
{
    if (c == 0)
        p.erase(k);
    else
        p[k] = c;
}

inline Poly add(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [k, c] : b) {
        auto it = out.find(k);
        const gvc::Rational sum = (it == out.end() ? gvc::Rational(0) : it->second) + c;
        set(out, k, sum);
    }
    return out;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = out.find(k);
            const gvc::Rational sum = (it == out.end() ? gvc::Rational(0) : it->second) + ca * cb;
            set(out, k, sum);
        }
    return out;
}

inline Poly dx(const Poly& p)
{
    Poly out;
    for (const auto& [k, c] : p)
        if (k.first >= 1)
            set(out, {k.first - 1, k.second}, c * k.first);
    return out;
}

inline Poly dy(const Poly& p)
{
    Poly out;
    for (const auto& [k, c] : p)
        if (k.second >= 1)
            set(out, {k.first, k.second - 1}, c * k.second);
    return out;
}

inline Poly dyn(Poly p, int n)
{
    for (int i = 0; i < n; ++i)
        p = dy(p);
    return p;
}

// Term-by-term evaluation; the independent route for checking canonical
// equality of engine results.
inline gvc::Rational eval(const gvc::Polynomial& p, const std::vector<gvc::Rational>& point)
{
    gvc::Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        gvc::Rational term = c;
        for (std::size_t v = 0; v < point.size(); ++v)
            for (int e = 0; e < m.exp(v); ++e)
                term *= point[v];
        total += term;
    }
    return total;
}

} // namespace naive
