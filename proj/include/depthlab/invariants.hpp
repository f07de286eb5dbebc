#ifndef DEPTHLAB_INVARIANTS_HPP
#define DEPTHLAB_INVARIANTS_HPP

#include "depthlab/homology.hpp"

namespace depthlab {

// sentinel for depth of the zero module / exact complex
inline constexpr std::int64_t kDepthInfinity = INT64_MAX / 2;

enum class DepthMethod {
    AuslanderBuchsbaumAmbient,
    RhomKoszul,
    TopHomologyShortcut,
};

struct DepthReport {
    std::int64_t value = 0;
    DepthMethod method = DepthMethod::AuslanderBuchsbaumAmbient;
    bool infinite() const { return value >= kDepthInfinity; }
};

// depth over R computed as (#variables) - pd over the ambient regular ring;
// exact, no truncation dependency.
DepthReport depth_module(const PresentedModule& m);

// depth of a homologically bounded complex with certified sup:
// -sup RHom(k, X), computed over the ambient ring through the Koszul
// resolution of k, with the top-homology shortcut applied when the top
// homology has depth <= 1.
DepthReport depth_complex(const ChainComplex& x);
// the full RHom route regardless of the shortcut (cross-check path)
DepthReport depth_complex_rhom(const ChainComplex& x);

struct TorWindowBound {
    std::int64_t value = 0; // largest i in [1, bound] with nonzero module, else 0
    std::int64_t bound = 0; // vanishing beyond this is NOT claimed
};

TorWindowBound q_bound(const PresentedModule& m, const PresentedModule& n, std::int64_t b);
TorWindowBound p_bound(const PresentedModule& m, const PresentedModule& n, std::int64_t b);

enum class ComplexityVerdict {
    PdFinite,
    BoundedBetti,
    PolynomialDegree,
    AtLeastExponential,
};

struct ComplexityEstimate {
    std::int64_t w0 = 0, w1 = 0;
    ComplexityVerdict verdict = ComplexityVerdict::PdFinite;
    std::int64_t fitted_degree = 0;
    std::vector<double> growth_ratios;
};

// Window-scoped growth classification of a Betti sequence. Never an
// asymptotic claim.
ComplexityEstimate complexity_estimate(const BettiTable& betti, std::int64_t w0,
                                       std::int64_t w1);

enum class TorsionVerdict { Torsion, NotTorsion, Unsupported };

// Over an asserted domain: torsion iff the annihilator is nonzero. The
// caller vouches for the domain hypothesis; we do not test primality.
TorsionVerdict torsion_check(const PresentedModule& t, bool domain_asserted);

const char* to_string(DepthMethod m);
const char* to_string(ComplexityVerdict v);
const char* to_string(TorsionVerdict v);

} // namespace depthlab

#endif
