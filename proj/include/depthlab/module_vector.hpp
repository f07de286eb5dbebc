#ifndef DEPTHLAB_MODULE_VECTOR_HPP
#define DEPTHLAB_MODULE_VECTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "depthlab/polynomial.hpp"

namespace depthlab {

// Graded free module: rank many generators, one degree shift each.
// Generator i of F(twists) sits in internal degree twists[i].
struct FreeModule {
    std::vector<std::int64_t> twists;

    std::size_t rank() const { return twists.size(); }
    static FreeModule trivial(std::size_t rank) { return FreeModule{std::vector<std::int64_t>(rank, 0)}; }

    bool operator==(const FreeModule& rhs) const { return twists == rhs.twists; }
};

// Element of a free module: one polynomial per generator.
class ModuleVector {
public:
    ModuleVector() = default;
    explicit ModuleVector(std::size_t rank) : comps_(rank) {}
    explicit ModuleVector(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    Polynomial& operator[](std::size_t i) { return comps_[i]; }
    const std::vector<Polynomial>& comps() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

private:
    std::vector<Polynomial> comps_;
};

ModuleVector mv_add(const PolyRing& S, const ModuleVector& a, const ModuleVector& b);
ModuleVector mv_sub(const PolyRing& S, const ModuleVector& a, const ModuleVector& b);
ModuleVector mv_neg(const PolyRing& S, const ModuleVector& a);
ModuleVector mv_scale(const PolyRing& S, PrimeFieldElement c, const ModuleVector& a);
ModuleVector mv_mono_mul(const PolyRing& S, PrimeFieldElement c, const Monomial& m,
                         const ModuleVector& a);
ModuleVector mv_poly_mul(const PolyRing& S, const Polynomial& f, const ModuleVector& a);
bool mv_equal(const PolyRing& S, const ModuleVector& a, const ModuleVector& b);

// Common internal degree of a homogeneous vector (component degree plus the
// generator twist). nullopt when components disagree or are inhomogeneous.
// The zero vector has no degree.
std::optional<std::int64_t> mv_degree(const PolyRing& S, const FreeModule& fm,
                                      const ModuleVector& v);

} // namespace depthlab

#endif
