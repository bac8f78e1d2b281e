#include "gvc/rational.hpp"

namespace gvc {

Int factorial(unsigned n)
{
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i; // exact at every step
    }
    return b;
}

Int falling_factorial(int n, unsigned k)
{
    Int f = 1;
    for (unsigned i = 0; i < k; ++i)
        f *= n - static_cast<int>(i);
    return f;
}

std::string format_rational(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

std::string format_rational_pair(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace gvc
