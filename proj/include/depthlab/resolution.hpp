#ifndef DEPTHLAB_RESOLUTION_HPP
#define DEPTHLAB_RESOLUTION_HPP

#include <map>
#include <optional>

#include "depthlab/presented_module.hpp"

namespace depthlab {

struct BettiTable {
    // graded[{i, j}] = rank of the degree-j part of the i-th free module
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> graded;
    std::vector<std::int64_t> total; // total[i] = beta_i

    std::int64_t beta(std::int64_t i) const {
        return (i >= 0 && i < static_cast<std::int64_t>(total.size())) ? total[i] : 0;
    }
};

// Minimal graded free resolution F_len -> ... -> F_1 -> F_0 (-> M -> 0),
// hard-truncated at the caller's bound unless the kernel became zero first.
class Resolution {
public:
    RingPtr ring;
    std::vector<FreeModule> frees;                 // F_0 .. F_len
    std::vector<std::vector<ModuleVector>> diffs;  // diffs[i] = columns of d_{i+1} in F_i
    bool complete = false;                         // kernel hit zero (pd = len)
    std::int64_t bound = 0;                        // requested truncation bound

    std::int64_t length() const { return static_cast<std::int64_t>(diffs.size()); }
    const std::vector<ModuleVector>& diff(std::int64_t i) const; // d_i, i in [1, length]
};

// Minimal generating subset of a homogeneous generating set, degree by
// degree via graded Nakayama (candidates processed by ascending degree,
// ties by input order).
std::vector<ModuleVector> minimal_generators(const std::vector<ModuleVector>& gens,
                                             const RingPtr& ring, const FreeModule& fm);

Resolution minimal_free_resolution(const PresentedModule& m, std::int64_t bound);

BettiTable betti_table(const Resolution& res);

// n-th syzygy module read off the minimal resolution: coker(d_{n+1}).
PresentedModule syzygy_module(const PresentedModule& m, std::int64_t n);

struct PdCertificate {
    bool finite = false;
    std::int64_t pd = -1;    // valid when finite
    std::int64_t bound = 0;  // "unknown beyond" this bound when not finite
};

PdCertificate pd_certificate(const PresentedModule& m, std::int64_t bound);

// The same module viewed over the ambient polynomial ring (ideal relations
// appended). The backbone of depth computations: pd over the ambient ring
// is always finite.
PresentedModule view_over_ambient(const PresentedModule& m);

// pd of M over the ambient ring; terminates at or before #variables.
std::int64_t ambient_pd(const PresentedModule& m);

// every differential entry lies in the maximal ideal
bool resolution_is_minimal(const Resolution& res);

} // namespace depthlab

#endif
