#pragma once

#include <cstddef>
#include <vector>

namespace gvc {

// Exponent tuple over a fixed ambient ring; slot i belongs to the ring's
// i-th variable. All exponents are >= 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    static Monomial unit(std::size_t nvars);

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    int total_degree() const;
    bool is_unit() const;

    Monomial times(const Monomial& other) const;
    Monomial with_exp(std::size_t i, int value) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
};

// Graded lexicographic order, larger first: higher total degree wins, ties
// fall to the leftmost differing exponent. A term map keyed with this
// comparator iterates in canonical print order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

} // namespace gvc
