#ifndef DEPTHLAB_REDUCING_HPP
#define DEPTHLAB_REDUCING_HPP

#include <optional>
#include <string>

#include "depthlab/invariants.hpp"

namespace depthlab {

// One step of a reducing sequence:
//   0 -> sum_j K_{i-1}(left_twists[j]) -> K_i -> sum_j Omega^n K_{i-1}(right_twists[j]) -> 0
// with a = |left_twists| >= 1, b = |right_twists| >= 1, n >= 0. Maps are
// given on generators of the canonical constructions.
struct ReducingStep {
    std::int64_t n = 0;
    std::vector<std::int64_t> left_twists;
    std::vector<std::int64_t> right_twists;
    std::vector<ModuleVector> left_cols;  // A -> K_i
    std::vector<ModuleVector> right_cols; // K_i -> C

    std::int64_t a() const { return static_cast<std::int64_t>(left_twists.size()); }
    std::int64_t b() const { return static_cast<std::int64_t>(right_twists.size()); }
};

struct ReducingSequence {
    std::vector<PresentedModule> modules; // K_0 .. K_r
    std::vector<ReducingStep> steps;      // steps[i]: K_i to K_{i+1} data

    std::int64_t r() const { return static_cast<std::int64_t>(steps.size()); }
};

struct StepFailure {
    std::int64_t step = 0; // 1-based
    std::string check;     // shape | composite-zero | left-injective | right-surjective |
                           // middle-exact | tail-pd
    std::string detail;
};

struct VerifyResult {
    bool ok = false;
    std::int64_t red_pd_bound = -1; // on success: red-pd <= r
    PdCertificate tail;
    std::optional<StepFailure> failure;
};

// Certifies every short exact sequence of the certificate (left map
// injective, right map surjective, middle homology zero, all by GB
// computations) and that pd(K_r) <= pd_bound.
VerifyResult verify_reducing_sequence(const ReducingSequence& seq, std::int64_t pd_bound);

struct SearchBudgets {
    std::int64_t max_r = 1;
    std::int64_t max_n = 1;
    std::int64_t max_ab = 4;
    std::int64_t pd_bound = 0;
    std::int64_t class_budget = 256;
};

struct SearchResult {
    std::optional<ReducingSequence> found;
    VerifyResult certificate; // filled when found
    std::int64_t nodes_explored = 0;
    std::string note; // "no certificate within budgets" on failure
};

// Iterative-deepening search for a reducing pd-sequence: for each target
// depth r, enumerate steps by ascending n, then a+b, then class index.
// Candidate middle terms come from the free cover of Omega^n M^b (when its
// syzygy matches a twisted sum of copies of M) and from extension classes
// in Ext^1(Omega^n M^b, sum M(t_j)), zero class first. A hit is re-verified
// before being returned. Not finding a certificate proves nothing.
SearchResult search_reducing_sequence(const PresentedModule& m, const SearchBudgets& budgets);

// Degree-0 homomorphisms A -> B as matrices on generators (a k-basis).
std::vector<std::vector<ModuleVector>> hom_basis_degree0(const PresentedModule& a,
                                                         const PresentedModule& b);

// Deterministic search for a graded isomorphism A -> B; nullopt when the
// candidates are exhausted (which does not prove non-isomorphism).
std::optional<PMMap> find_graded_iso(const PresentedModule& a, const PresentedModule& b);

} // namespace depthlab

#endif
