#ifndef DEPTHLAB_CHAIN_COMPLEX_HPP
#define DEPTHLAB_CHAIN_COMPLEX_HPP

#include <optional>

#include "depthlab/presented_module.hpp"

namespace depthlab {

// Bounded complex of presented modules, indexed homologically on a window
// [lo, hi]. diffs[k] is the matrix of d_{lo+k+1} : X_{lo+k+1} -> X_{lo+k}
// on generators. Terms outside the window are zero.
//
// trusted_hi marks how far homology is meaningful: complexes built from
// hard-truncated resolutions carry wrong homology at their top edge, and
// homology_at refuses to answer there rather than silently returning 0.
class ChainComplex {
public:
    ChainComplex(RingPtr ring, std::int64_t lo, std::vector<PresentedModule> terms,
                 std::vector<std::vector<ModuleVector>> diffs, std::int64_t trusted_hi,
                 std::optional<std::int64_t> trusted_lo = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(terms_.size()) - 1; }
    std::int64_t trusted_hi() const { return trusted_hi_; }
    std::int64_t trusted_lo() const { return trusted_lo_; }
    bool fully_trusted() const { return trusted_lo_ == lo() && trusted_hi_ == hi(); }

    const PresentedModule& term(std::int64_t i) const;
    bool in_window(std::int64_t i) const { return i >= lo() && i <= hi(); }
    // d_i for lo < i <= hi
    const std::vector<ModuleVector>& diff(std::int64_t i) const;

    // sup of homology when certified by the producer or by a scan;
    // certified_exact means the complex is exact everywhere (X ~ 0)
    std::optional<std::int64_t> certified_sup;
    bool certified_exact = false;

    void validate() const;

private:
    RingPtr ring_;
    std::int64_t lo_;
    std::int64_t trusted_hi_;
    std::int64_t trusted_lo_;
    std::vector<PresentedModule> terms_;
    std::vector<std::vector<ModuleVector>> diffs_;
};

// X[s]: X[s]_n = X_{n-s}, differentials pick up (-1)^s
ChainComplex shift_complex(const ChainComplex& x, std::int64_t s);

// ker d_i / im d_{i+1}, minimized. Positions must lie in [lo, trusted_hi].
PresentedModule homology_at(const ChainComplex& x, std::int64_t i);

// Certifies sup by scanning the whole window (requires full trust):
// fills certified_sup / certified_exact.
void certify_sup_by_scan(ChainComplex& x);

struct KoszulComplex {
    std::vector<Polynomial> elements;
    ChainComplex complex;
};

// Exterior-algebra complex on homogeneous elements of m. Unit elements are
// rejected. Length-1 case is 0 -> R -> R -> 0 with differential x.
KoszulComplex koszul(const RingPtr& ring, std::vector<Polynomial> elements);

// Single presented module placed in degree `at`.
ChainComplex module_as_complex(const PresentedModule& m, std::int64_t at);

} // namespace depthlab

#endif
