#ifndef DEPTHLAB_GROEBNER_HPP
#define DEPTHLAB_GROEBNER_HPP

#include <vector>

#include "depthlab/graded_ring.hpp"
#include "depthlab/module_vector.hpp"

namespace depthlab {

struct ModTerm {
    std::size_t pos;
    Monomial mono;
};

// Position-over-term order on a free module. Positions are ranked by
// (twist, index) ascending; a lower rank beats any monomial comparison.
// An optional elimination split makes one block of positions dominate
// another, which is how syzygies are read off a single GB run.
class ModuleOrder {
public:
    static ModuleOrder pot(const FreeModule& fm);
    // positions [0, main_rank) dominate positions [main_rank, rank)
    static ModuleOrder elimination(const FreeModule& fm, std::size_t main_rank);

    // negative if a < b, 0 if equal, positive if a > b
    int cmp(const PolyRing& S, const ModTerm& a, const ModTerm& b) const;
    std::size_t rank_of(std::size_t pos) const { return rank_[pos]; }

private:
    std::vector<std::size_t> rank_; // smaller rank = greater position
};

// Groebner basis of a submodule of a graded free module over R = S/I.
// Internally this is an S-basis of the preimage submodule (the inputs
// together with I times the free basis), so normal forms against it are
// normal forms over R.
class SubmoduleGB {
public:
    const RingPtr& ring() const { return ring_; }
    const FreeModule& free_module() const { return fm_; }
    const std::vector<ModuleVector>& basis() const { return basis_; }
    const std::vector<ModTerm>& leads() const { return leads_; }
    const ModuleOrder& order() const { return order_; }
    bool reduced() const { return reduced_; }

private:
    friend SubmoduleGB buchberger(std::vector<ModuleVector>, const RingPtr&, const FreeModule&);
    friend SubmoduleGB buchberger_with_order(std::vector<ModuleVector>, const RingPtr&,
                                             const FreeModule&, const ModuleOrder&, bool);

    RingPtr ring_;
    FreeModule fm_;
    ModuleOrder order_ = ModuleOrder::pot(FreeModule{});
    std::vector<ModuleVector> basis_;
    std::vector<ModTerm> leads_;
    bool reduced_ = false;
};

// Largest term of v under the order. v must be nonzero.
ModTerm lead_term(const PolyRing& S, const ModuleOrder& ord, const ModuleVector& v);

// Reduced Groebner basis of the submodule of F generated by `gens` over the
// ring (quotient arithmetic included). Inputs must be homogeneous; the error
// message carries the index of an offending generator. Deterministic:
// S-pairs are processed by ascending degree, ties by insertion order.
SubmoduleGB buchberger(std::vector<ModuleVector> gens, const RingPtr& ring,
                       const FreeModule& fm);

SubmoduleGB buchberger_with_order(std::vector<ModuleVector> gens, const RingPtr& ring,
                                  const FreeModule& fm, const ModuleOrder& ord,
                                  bool augment_ideal);

// Full normal form: no term of the result is divisible by a lead term of
// the basis. v - normal_form(v) lies in the submodule.
ModuleVector normal_form(const ModuleVector& v, const SubmoduleGB& gb);

bool is_member(const ModuleVector& v, const SubmoduleGB& gb);

// Generating set of { a in R^m : sum a_i vecs_i = 0 in F tensor R }.
// Components come back ideal-reduced; vectors that die in R^m are dropped.
std::vector<ModuleVector> syzygy_basis(const std::vector<ModuleVector>& vecs,
                                       const RingPtr& ring, const FreeModule& fm);

// Convenience wrappers for ideals (rank-one case).
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PolyRing& S);
Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                            const PolyRing& S);

} // namespace depthlab

#endif
