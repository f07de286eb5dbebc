#ifndef DEPTHLAB_GRADED_LINALG_HPP
#define DEPTHLAB_GRADED_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "depthlab/fplinalg.hpp"
#include "depthlab/presented_module.hpp"

namespace depthlab {

// Monomials of exact weighted degree d, sorted descending in the ring order.
std::vector<Monomial> monomials_of_degree(const PolyRing& S, std::int64_t d);

// k-basis of R_d: monomials of degree d outside the initial ideal.
std::vector<Monomial> standard_monomials(const GradedRing& R, std::int64_t d);

// Coordinates for the degree-d piece of a free module F tensor R:
// position-tagged standard monomials.
struct PieceBasis {
    std::int64_t degree = 0;
    std::vector<ModTerm> elems; // (position, standard monomial)
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> index;

    std::size_t dim() const { return elems.size(); }
};

PieceBasis free_piece_basis(const GradedRing& R, const FreeModule& fm, std::int64_t d);

// Coordinate vector of an ideal-reduced v in the piece basis. Throws if a
// term of v falls outside the basis (i.e. v was not reduced or has the
// wrong degree).
std::vector<std::uint32_t> piece_coords(const PieceBasis& basis, const ModuleVector& v);

// Span of the degree-d slice of the submodule generated by `gens` inside
// F tensor R: all standard-monomial multiples of the generators, reduced.
RowSpan submodule_piece_span(const GradedRing& R, const FreeModule& fm,
                             const std::vector<ModuleVector>& gens, const PieceBasis& basis);

// dim_k of the degree-d piece of a presented module
std::int64_t graded_dim(const PresentedModule& m, std::int64_t d);

// Graded Hilbert data over a degree window, for quick module comparisons.
std::vector<std::int64_t> graded_dims(const PresentedModule& m, std::int64_t lo,
                                      std::int64_t hi);

} // namespace depthlab

#endif
