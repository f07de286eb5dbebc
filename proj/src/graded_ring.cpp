#include "depthlab/graded_ring.hpp"

#include "depthlab/groebner.hpp"

namespace depthlab {

namespace {

// Krull dimension of S/in(I): the largest set U of variables such that no
// lead monomial of the reduced GB is supported inside U. Variable counts
// here are tiny, so subset enumeration is fine.
std::int64_t dim_from_initial(const PolyRing& S, const std::vector<Polynomial>& gb) {
    const std::size_t n = S.nvars();
    std::vector<std::uint32_t> lead_support;
    for (const auto& g : gb) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.lead().mono.exps[i] > 0) mask |= (1u << i);
        if (mask == 0) return -1; // unit ideal: R = 0
        lead_support.push_back(mask);
    }
    std::int64_t best = 0;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        bool ok = true;
        for (auto m : lead_support) {
            if ((m & ~u) == 0) { // support inside U
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        best = std::max<std::int64_t>(best, __builtin_popcount(u));
    }
    return best;
}

} // namespace

RingPtr GradedRing::make(PolyRingPtr ambient, std::vector<Polynomial> ideal_gens) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->ambient_ = std::move(ambient);
    for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
        if (ideal_gens[i].is_zero()) continue;
        if (!ring->ambient_->homogeneous_degree(ideal_gens[i]))
            throw StructuralError("ideal generator " + std::to_string(i) +
                                  " is not homogeneous");
        ring->ideal_gens_.push_back(ideal_gens[i]);
    }
    ring->ideal_gb_ = groebner_basis(ring->ideal_gens_, *ring->ambient_);
    for (const auto& g : ring->ideal_gb_)
        if (!g.is_zero() && g.lead().mono.is_one())
            throw StructuralError("ideal is the unit ideal; quotient ring is zero");
    ring->krull_dim_ = dim_from_initial(*ring->ambient_, ring->ideal_gb_);
    return ring;
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
    if (ideal_gb_.empty()) return f;
    return poly_normal_form(f, ideal_gb_, *ambient_);
}

ModuleVector GradedRing::reduce(const ModuleVector& v) const {
    if (ideal_gb_.empty()) return v;
    ModuleVector out(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = reduce(v[i]);
    return out;
}

bool GradedRing::same_ring(const GradedRing& other) const {
    if (this == &other) return true;
    if (!ambient_->same_ring(*other.ambient_)) return false;
    if (ideal_gb_.size() != other.ideal_gb_.size()) return false;
    for (std::size_t i = 0; i < ideal_gb_.size(); ++i)
        if (!ambient_->equal(ideal_gb_[i], other.ideal_gb_[i])) return false;
    return true;
}

// GradedRing::depth() is defined in invariants.cpp (it needs the ambient
// resolution machinery).

} // namespace depthlab
