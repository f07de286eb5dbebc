#ifndef DEPTHLAB_FORMULAS_HPP
#define DEPTHLAB_FORMULAS_HPP

#include "depthlab/reducing.hpp"

namespace depthlab {

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    std::string note;
};

// Outcome of one theorem check. `verdict` is one of:
//   holds                      both sides equal, all hypothesis gates passed
//   equation-holds-hypotheses-incomplete
//   violated-within-bound      equality fails; q certified only up to bound_b
//   consistent / inconsistent  for the truth-table checks
struct FormulaReport {
    std::string formula;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::vector<Hypothesis> hypotheses;
    std::string verdict;
    std::int64_t bound_b = 0;
    bool certificate_attached = false;
    std::vector<std::pair<std::string, std::int64_t>> details;

    bool holds() const { return verdict == "holds"; }
    bool equation_ok() const { return lhs == rhs; }
};

enum class DepthFormulaMode { Classic, Derived };

// Classic: depth M + depth N vs depth R + depth(M tensor N), under q = 0
// certified up to b. Derived: depth M + depth N vs depth R + depth of the
// truncated derived tensor complex. An optional verified reducing
// certificate for M feeds the hypothesis gates.
FormulaReport depth_formula_check(const PresentedModule& m, const PresentedModule& n,
                                  std::int64_t b, DepthFormulaMode mode,
                                  const ReducingSequence* cert = nullptr,
                                  std::int64_t cert_pd_bound = 0);

// Prop 4.5 bounds, Cor 4.6 equality cases, and the maximal-ideal
// contribution of the dependency formula. Refuses without a verified
// reducing certificate.
FormulaReport dependency_bounds_check(const PresentedModule& m, const PresentedModule& n,
                                      std::int64_t b, const ReducingSequence& cert,
                                      std::int64_t cert_pd_bound);

// One-dimensional equivalence: (i) q = 0, (ii) M or N torsion-free,
// (iii) the classic depth formula equality. Requires a 1-dimensional CM
// ring and a verified certificate for M.
FormulaReport one_dim_equivalence_check(const PresentedModule& m, const PresentedModule& n,
                                        std::int64_t b, const ReducingSequence& cert,
                                        std::int64_t cert_pd_bound);

struct ReductionCheck {
    FormulaReport over_r;
    FormulaReport over_quotient;
    bool verdicts_match = false;
    bool depth_drops_by_one = false;
};

// Regular-element reduction: the derived depth formula verdict over R must
// agree with the verdict over R/xR when x is a non zero-divisor on R, M,
// and N (both sides computed independently).
ReductionCheck regular_element_reduction_check(const PresentedModule& m,
                                               const PresentedModule& n, const Polynomial& x,
                                               std::int64_t b);

// R/xR together with M/xM for reuse by callers and tests.
RingPtr quotient_ring_by_element(const RingPtr& ring, const Polynomial& x);
PresentedModule reduce_module_mod_element(const PresentedModule& m, const RingPtr& quotient);

} // namespace depthlab

#endif
