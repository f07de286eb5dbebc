#ifndef DEPTHLAB_HOMOLOGY_HPP
#define DEPTHLAB_HOMOLOGY_HPP

#include "depthlab/chain_complex.hpp"
#include "depthlab/resolution.hpp"

namespace depthlab {

// F tensor N for a resolution F of M: term i is N^{beta_i}, twisted by the
// twists of F_i; differentials are F's matrices acting on the copies.
// Homology above length-1 of a truncated resolution is not trusted.
ChainComplex tensor_resolution(const Resolution& f, const PresentedModule& n);

// Hom(F, N) with Hom(F_i, N) placed at position -i, so Ext^i = H_{-i}.
ChainComplex hom_resolution(const Resolution& f, const PresentedModule& n);

// Tor_i(M, N) for 0 <= i <= b, each minimized.
std::vector<PresentedModule> tor(const PresentedModule& m, const PresentedModule& n,
                                 std::int64_t b);

// Ext^i(M, N) for 0 <= i <= b, each minimized.
std::vector<PresentedModule> ext(const PresentedModule& m, const PresentedModule& n,
                                 std::int64_t b);

// Good truncation: H_i(result) = H_i(X) for i <= q and 0 above. The term at
// q absorbs im d_{q+1} into its relations; the window closes at q.
ChainComplex good_truncation_below(const ChainComplex& x, std::int64_t q);

// X tensor K for a bounded complex K of free modules. Requires X fully
// trusted; the result is fully trusted.
ChainComplex tensor_with_free_complex(const ChainComplex& x, const ChainComplex& k);

// Hom(K, X) for a bounded complex K of free modules, placed homologically
// (Hom(K_p, X_q) sits at q - p). Requires X fully trusted.
ChainComplex hom_from_free_complex(const ChainComplex& k, const ChainComplex& x);

} // namespace depthlab

#endif
