#ifndef DEPTHLAB_MONOMIAL_HPP
#define DEPTHLAB_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace depthlab {

// Exponent vector with its weighted total degree cached at construction.
// Degree bookkeeping is owned by PolyRing (it knows the weights); Monomial
// itself is a dumb value.
struct Monomial {
    std::vector<std::uint32_t> exps;
    std::int64_t degree = 0;

    bool operator==(const Monomial& rhs) const { return exps == rhs.exps; }
    bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }
    bool is_one() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }
};

enum class OrderKind {
    WeightedGrevlex,
    WeightedGrlex,
};

} // namespace depthlab

#endif
