#ifndef DEPTHLAB_PRESENTED_MODULE_HPP
#define DEPTHLAB_PRESENTED_MODULE_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "depthlab/groebner.hpp"

namespace depthlab {

// Finitely presented graded module M = coker(P : F1 -> F0) over R = S/I.
// The presentation matrix is stored column-wise as homogeneous vectors in
// F0, entries kept ideal-reduced. Relation columns that die in R are
// dropped at construction.
class PresentedModule {
public:
    PresentedModule(RingPtr ring, FreeModule gens, std::vector<ModuleVector> rels);

    static PresentedModule free_module(RingPtr ring, FreeModule fm);
    static PresentedModule zero(RingPtr ring);
    static PresentedModule ring_module(RingPtr ring);    // R itself
    static PresentedModule residue_field(RingPtr ring);  // k = R/m
    // R/(f_1..f_s) for homogeneous f_i
    static PresentedModule quotient_by_elements(RingPtr ring, std::vector<Polynomial> elems);
    // submodule of R generated by homogeneous elements, presented by its
    // syzygies (an "ideal as module" constructor)
    static PresentedModule ideal_module(RingPtr ring, std::vector<Polynomial> elems);

    const RingPtr& ring() const { return ring_; }
    const FreeModule& gens() const { return gens_; }
    std::size_t rank0() const { return gens_.rank(); }
    const std::vector<ModuleVector>& rels() const { return rels_; }

    // GB of the relation submodule (ideal-augmented); zero tests and
    // membership for elements of F0 route through this.
    const SubmoduleGB& rel_gb() const;

    bool same_module_data(const PresentedModule& other) const;

private:
    RingPtr ring_;
    FreeModule gens_;
    std::vector<ModuleVector> rels_;

    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const SubmoduleGB> rel_gb;
        std::shared_ptr<const PresentedModule> minimal;
    };
    mutable std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

    friend const PresentedModule& minimal_presentation_cached(const PresentedModule&);
};

// Isomorphic module with no unit entries in the presentation matrix
// (Gaussian elimination of units, free summands split off) and no zero
// relation columns. Generators of the result are minimal generators.
PresentedModule minimal_presentation(const PresentedModule& m);
const PresentedModule& minimal_presentation_cached(const PresentedModule& m);

bool is_zero_module(const PresentedModule& m);

// M(t): degree shift, (M(t))_d = M_{d+t}
PresentedModule twist_module(const PresentedModule& m, std::int64_t t);
// finite direct sum of twisted copies
PresentedModule direct_sum(const std::vector<PresentedModule>& mods);
PresentedModule direct_sum_copies(const PresentedModule& m,
                                  const std::vector<std::int64_t>& twists);

// Map of presented modules, given on generators: column j is the image of
// source generator j as an element of target's F0.
struct PMMap {
    PresentedModule src;
    PresentedModule tgt;
    std::vector<ModuleVector> cols;
};

PMMap make_map(PresentedModule src, PresentedModule tgt, std::vector<ModuleVector> cols);
// validity: homogeneity of columns against twists and phi(rel_src) in im(rel_tgt)
void validate_map(const PMMap& phi);
PMMap identity_map(const PresentedModule& m);
PMMap compose(const PMMap& g, const PMMap& f); // g after f

ModuleVector apply_map(const PMMap& phi, const ModuleVector& v);

struct KernelData {
    PresentedModule module;               // ker(phi), minimized
    std::vector<ModuleVector> numerator;  // generators of preimage(im rels_tgt) in F0_src
};

// Kernel of a map of presented modules, via syzygies.
KernelData kernel_of_map(const PMMap& phi);
PresentedModule cokernel_of_map(const PMMap& phi);

bool is_injective(const PMMap& phi);
bool is_surjective(const PMMap& phi);

// ann(M) != 0, decided by the kernel of R -> M^{#gens}
bool annihilator_is_nonzero(const PresentedModule& m);

// x acts as a non zero-divisor on M
bool is_nonzerodivisor_on(const Polynomial& x, const PresentedModule& m);

} // namespace depthlab

#endif
