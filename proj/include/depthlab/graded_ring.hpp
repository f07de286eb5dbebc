#ifndef DEPTHLAB_GRADED_RING_HPP
#define DEPTHLAB_GRADED_RING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "depthlab/module_vector.hpp"
#include "depthlab/polynomial.hpp"

namespace depthlab {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// R = S/I for a homogeneous ideal I of the ambient weighted polynomial
// ring S. Elements of R are represented by their normal forms against the
// reduced ideal Groebner basis; there is no separate residue-class type.
class GradedRing {
public:
    static RingPtr make(PolyRingPtr ambient, std::vector<Polynomial> ideal_gens);

    const PolyRing& poly() const { return *ambient_; }
    const PolyRingPtr& poly_ptr() const { return ambient_; }
    const std::vector<Polynomial>& ideal_gens() const { return ideal_gens_; }
    const std::vector<Polynomial>& ideal_gb() const { return ideal_gb_; }
    bool is_quotient() const { return !ideal_gb_.empty(); }

    // normal form against the ideal GB: the canonical representative in R
    Polynomial reduce(const Polynomial& f) const;
    ModuleVector reduce(const ModuleVector& v) const;

    std::int64_t krull_dim() const { return krull_dim_; }
    // depth of R as a module over itself, via the ambient resolution;
    // computed lazily (definition lives with the invariants code)
    std::int64_t depth() const;
    bool is_cohen_macaulay() const { return depth() == krull_dim(); }

    bool same_ring(const GradedRing& other) const;

private:
    GradedRing() = default;

    PolyRingPtr ambient_;
    std::vector<Polynomial> ideal_gens_;
    std::vector<Polynomial> ideal_gb_;
    std::int64_t krull_dim_ = 0;

    mutable std::mutex depth_mutex_;
    mutable std::optional<std::int64_t> depth_;
};

} // namespace depthlab

#endif
