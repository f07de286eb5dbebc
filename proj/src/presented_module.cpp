#include "depthlab/presented_module.hpp"

#include <algorithm>

namespace depthlab {

PresentedModule::PresentedModule(RingPtr ring, FreeModule gens, std::vector<ModuleVector> rels)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    const PolyRing& S = ring_->poly();
    for (std::size_t j = 0; j < rels.size(); ++j) {
        ModuleVector r = ring_->reduce(rels[j]);
        if (r.is_zero()) continue;
        if (r.rank() != gens_.rank())
            throw StructuralError("relation " + std::to_string(j) + ": rank mismatch");
        if (!mv_degree(S, gens_, r))
            throw StructuralError("relation " + std::to_string(j) + " is not homogeneous");
        rels_.push_back(std::move(r));
    }
}

PresentedModule PresentedModule::free_module(RingPtr ring, FreeModule fm) {
    return PresentedModule(std::move(ring), std::move(fm), {});
}

PresentedModule PresentedModule::zero(RingPtr ring) {
    return PresentedModule(std::move(ring), FreeModule{}, {});
}

PresentedModule PresentedModule::ring_module(RingPtr ring) {
    return free_module(std::move(ring), FreeModule::trivial(1));
}

PresentedModule PresentedModule::residue_field(RingPtr ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->poly().nvars(); ++i)
        vars.push_back(ring->poly().variable(i));
    return quotient_by_elements(std::move(ring), std::move(vars));
}

PresentedModule PresentedModule::quotient_by_elements(RingPtr ring,
                                                      std::vector<Polynomial> elems) {
    std::vector<ModuleVector> rels;
    for (auto& f : elems) {
        ModuleVector v(1);
        v[0] = std::move(f);
        rels.push_back(std::move(v));
    }
    return PresentedModule(std::move(ring), FreeModule::trivial(1), std::move(rels));
}

PresentedModule PresentedModule::ideal_module(RingPtr ring, std::vector<Polynomial> elems) {
    const PolyRing& S = ring->poly();
    const FreeModule ambient = FreeModule::trivial(1);
    std::vector<ModuleVector> vecs;
    FreeModule gens;
    for (auto& f : elems) {
        Polynomial g = ring->reduce(f);
        if (g.is_zero()) throw StructuralError("ideal module generator is zero in R");
        auto d = S.homogeneous_degree(g);
        if (!d) throw StructuralError("ideal module generator is not homogeneous");
        gens.twists.push_back(*d);
        ModuleVector v(1);
        v[0] = std::move(g);
        vecs.push_back(std::move(v));
    }
    std::vector<ModuleVector> rels = syzygy_basis(vecs, ring, ambient);
    return PresentedModule(std::move(ring), std::move(gens), std::move(rels));
}

const SubmoduleGB& PresentedModule::rel_gb() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->rel_gb) {
        cache_->rel_gb = std::make_shared<const SubmoduleGB>(buchberger(rels_, ring_, gens_));
    }
    return *cache_->rel_gb;
}

bool PresentedModule::same_module_data(const PresentedModule& other) const {
    const PolyRing& S = ring_->poly();
    if (!ring_->same_ring(*other.ring_)) return false;
    if (!(gens_ == other.gens_)) return false;
    if (rels_.size() != other.rels_.size()) return false;
    for (std::size_t i = 0; i < rels_.size(); ++i)
        if (!mv_equal(S, rels_[i], other.rels_[i])) return false;
    return true;
}

namespace {

// One pass of unit elimination on a mutable column list. Returns the
// isomorphic smaller presentation.
PresentedModule eliminate_units(const PresentedModule& m) {
    const RingPtr& ring = m.ring();
    const PolyRing& S = ring->poly();
    std::vector<std::int64_t> twists = m.gens().twists;
    std::vector<ModuleVector> cols = m.rels();

    while (true) {
        std::size_t ui = SIZE_MAX, uj = SIZE_MAX;
        for (std::size_t j = 0; j < cols.size() && uj == SIZE_MAX; ++j) {
            for (std::size_t i = 0; i < twists.size(); ++i) {
                const Polynomial& e = cols[j][i];
                if (!e.is_zero() && e.lead().mono.is_one()) {
                    ui = i;
                    uj = j;
                    break;
                }
            }
        }
        if (uj == SIZE_MAX) break;

        const PrimeFieldElement u = cols[uj][ui].lead().coeff;
        const PrimeFieldElement uinv = u.inverse();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == uj) continue;
            const Polynomial& e = cols[j][ui];
            if (e.is_zero()) continue;
            const Polynomial factor = S.scale(uinv, e);
            ModuleVector adjusted = mv_sub(S, cols[j], mv_poly_mul(S, factor, cols[uj]));
            cols[j] = ring->reduce(adjusted);
        }
        // drop generator ui and relation uj
        for (auto& c : cols) {
            ModuleVector shrunk(twists.size() - 1);
            for (std::size_t i = 0, t = 0; i < twists.size(); ++i) {
                if (i == ui) continue;
                shrunk[t++] = c[i];
            }
            c = std::move(shrunk);
        }
        cols.erase(cols.begin() + uj);
        twists.erase(twists.begin() + ui);
    }

    std::vector<ModuleVector> kept;
    for (auto& c : cols)
        if (!c.is_zero()) kept.push_back(std::move(c));
    return PresentedModule(ring, FreeModule{std::move(twists)}, std::move(kept));
}

} // namespace

PresentedModule minimal_presentation(const PresentedModule& m) {
    return eliminate_units(m);
}

const PresentedModule& minimal_presentation_cached(const PresentedModule& m) {
    std::lock_guard<std::mutex> lock(m.cache_->mutex);
    if (!m.cache_->minimal)
        m.cache_->minimal = std::make_shared<const PresentedModule>(eliminate_units(m));
    return *m.cache_->minimal;
}

bool is_zero_module(const PresentedModule& m) {
    return minimal_presentation_cached(m).rank0() == 0;
}

PresentedModule twist_module(const PresentedModule& m, std::int64_t t) {
    FreeModule fm = m.gens();
    for (auto& tw : fm.twists) tw -= t;
    return PresentedModule(m.ring(), std::move(fm), m.rels());
}

PresentedModule direct_sum(const std::vector<PresentedModule>& mods) {
    if (mods.empty()) throw StructuralError("direct sum of an empty list needs a ring");
    const RingPtr& ring = mods.front().ring();
    FreeModule fm;
    std::vector<ModuleVector> rels;
    std::size_t offset = 0;
    std::size_t total = 0;
    for (const auto& m : mods) total += m.rank0();
    for (const auto& m : mods) {
        if (!ring->same_ring(*m.ring())) throw StructuralError("direct sum: ring mismatch");
        for (auto t : m.gens().twists) fm.twists.push_back(t);
        for (const auto& r : m.rels()) {
            ModuleVector big(total);
            for (std::size_t i = 0; i < m.rank0(); ++i) big[offset + i] = r[i];
            rels.push_back(std::move(big));
        }
        offset += m.rank0();
    }
    return PresentedModule(ring, std::move(fm), std::move(rels));
}

PresentedModule direct_sum_copies(const PresentedModule& m,
                                  const std::vector<std::int64_t>& twists) {
    std::vector<PresentedModule> copies;
    copies.reserve(twists.size());
    for (auto t : twists) copies.push_back(twist_module(m, t));
    return direct_sum(copies);
}

PMMap make_map(PresentedModule src, PresentedModule tgt, std::vector<ModuleVector> cols) {
    PMMap phi{std::move(src), std::move(tgt), {}};
    phi.cols.reserve(cols.size());
    for (auto& c : cols) phi.cols.push_back(phi.tgt.ring()->reduce(c));
    validate_map(phi);
    return phi;
}

void validate_map(const PMMap& phi) {
    const PolyRing& S = phi.src.ring()->poly();
    if (!phi.src.ring()->same_ring(*phi.tgt.ring()))
        throw StructuralError("module map: ring mismatch");
    if (phi.cols.size() != phi.src.rank0())
        throw StructuralError("module map: column count mismatch");
    for (std::size_t j = 0; j < phi.cols.size(); ++j) {
        if (phi.cols[j].rank() != phi.tgt.rank0())
            throw StructuralError("module map: column rank mismatch");
        if (phi.cols[j].is_zero()) continue;
        auto d = mv_degree(S, phi.tgt.gens(), phi.cols[j]);
        if (!d || *d != phi.src.gens().twists[j])
            throw StructuralError("module map: column " + std::to_string(j) +
                                  " is not homogeneous of the generator degree");
    }
    // well-definedness: images of source relations must die in the target
    for (const auto& r : phi.src.rels()) {
        ModuleVector img = apply_map(phi, r);
        if (!is_member(img, phi.tgt.rel_gb()))
            throw StructuralError("module map does not kill a source relation");
    }
}

ModuleVector apply_map(const PMMap& phi, const ModuleVector& v) {
    const PolyRing& S = phi.src.ring()->poly();
    ModuleVector out(phi.tgt.rank0());
    for (std::size_t j = 0; j < phi.cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        out = mv_add(S, out, mv_poly_mul(S, v[j], phi.cols[j]));
    }
    return phi.tgt.ring()->reduce(out);
}

PMMap identity_map(const PresentedModule& m) {
    std::vector<ModuleVector> cols;
    for (std::size_t j = 0; j < m.rank0(); ++j) {
        ModuleVector e(m.rank0());
        e[j] = m.ring()->poly().one();
        cols.push_back(std::move(e));
    }
    PMMap phi{m, m, std::move(cols)};
    return phi;
}

PMMap compose(const PMMap& g, const PMMap& f) {
    std::vector<ModuleVector> cols;
    cols.reserve(f.cols.size());
    for (const auto& c : f.cols) cols.push_back(apply_map(g, c));
    PMMap out{f.src, g.tgt, std::move(cols)};
    return out;
}

KernelData kernel_of_map(const PMMap& phi) {
    const RingPtr& ring = phi.src.ring();
    // numerator: vectors u in F0_src with phi(u) in im(rels_tgt)
    std::vector<ModuleVector> combined = phi.cols;
    for (const auto& r : phi.tgt.rels()) combined.push_back(r);
    std::vector<ModuleVector> syz = syzygy_basis(combined, ring, phi.tgt.gens());

    const std::size_t a = phi.src.rank0();
    std::vector<ModuleVector> numerator;
    for (const auto& s : syz) {
        ModuleVector u(a);
        for (std::size_t i = 0; i < a; ++i) u[i] = s[i];
        if (!u.is_zero()) numerator.push_back(std::move(u));
    }

    // kernel = numerator / im(rels_src)
    const PolyRing& S = ring->poly();
    FreeModule kfm;
    for (const auto& u : numerator) kfm.twists.push_back(*mv_degree(S, phi.src.gens(), u));

    std::vector<ModuleVector> combined2 = numerator;
    for (const auto& r : phi.src.rels()) combined2.push_back(r);
    std::vector<ModuleVector> syz2 = syzygy_basis(combined2, ring, phi.src.gens());
    std::vector<ModuleVector> krels;
    for (const auto& s : syz2) {
        ModuleVector u(numerator.size());
        for (std::size_t i = 0; i < numerator.size(); ++i) u[i] = s[i];
        if (!u.is_zero()) krels.push_back(std::move(u));
    }
    PresentedModule ker(ring, std::move(kfm), std::move(krels));
    return KernelData{minimal_presentation(ker), std::move(numerator)};
}

PresentedModule cokernel_of_map(const PMMap& phi) {
    std::vector<ModuleVector> rels = phi.tgt.rels();
    for (const auto& c : phi.cols) rels.push_back(c);
    return PresentedModule(phi.tgt.ring(), phi.tgt.gens(), std::move(rels));
}

bool is_injective(const PMMap& phi) {
    return is_zero_module(kernel_of_map(phi).module);
}

bool is_surjective(const PMMap& phi) {
    return is_zero_module(cokernel_of_map(phi));
}

bool annihilator_is_nonzero(const PresentedModule& m) {
    const PresentedModule& mm = minimal_presentation_cached(m);
    if (mm.rank0() == 0) return true; // ann(0) = R
    // r |-> (r g_1, ..., r g_s): kernel of R -> sum of twisted copies of M
    // is ann(M); copy i is twisted so that hitting generator i is degree 0
    const RingPtr& ring = mm.ring();
    std::vector<PresentedModule> copies;
    for (std::size_t i = 0; i < mm.rank0(); ++i)
        copies.push_back(twist_module(mm, mm.gens().twists[i]));
    PresentedModule big = direct_sum(copies);
    ModuleVector col(big.rank0());
    std::size_t off = 0;
    for (std::size_t i = 0; i < mm.rank0(); ++i) {
        col[off + i] = ring->poly().one();
        off += mm.rank0();
    }
    PMMap phi = make_map(PresentedModule::ring_module(ring), big, {col});
    return !is_injective(phi);
}

bool is_nonzerodivisor_on(const Polynomial& x, const PresentedModule& m) {
    const RingPtr& ring = m.ring();
    const PolyRing& S = ring->poly();
    Polynomial xr = ring->reduce(x);
    if (xr.is_zero()) return is_zero_module(m);
    auto d = S.homogeneous_degree(xr);
    if (!d) throw StructuralError("nonzerodivisor test needs a homogeneous element");
    std::vector<ModuleVector> cols;
    for (std::size_t j = 0; j < m.rank0(); ++j) {
        ModuleVector e(m.rank0());
        e[j] = xr;
        cols.push_back(std::move(e));
    }
    PMMap mult = make_map(twist_module(m, -*d), m, std::move(cols));
    return is_injective(mult);
}

} // namespace depthlab
