#include "depthlab/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "depthlab/graded_linalg.hpp"

namespace depthlab {

const std::vector<ModuleVector>& Resolution::diff(std::int64_t i) const {
    if (i < 1 || i > length()) throw StructuralError("resolution differential out of range");
    return diffs[static_cast<std::size_t>(i - 1)];
}

std::vector<ModuleVector> minimal_generators(const std::vector<ModuleVector>& gens,
                                             const RingPtr& ring, const FreeModule& fm) {
    const PolyRing& S = ring->poly();
    struct Cand {
        std::int64_t deg;
        std::size_t idx;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        auto d = mv_degree(S, fm, gens[i]);
        if (!d) throw StructuralError("minimal generators: inhomogeneous input");
        cands.push_back(Cand{*d, i});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.deg < b.deg; });

    std::vector<ModuleVector> kept;
    std::size_t at = 0;
    while (at < cands.size()) {
        const std::int64_t d = cands[at].deg;
        const PieceBasis basis = free_piece_basis(*ring, fm, d);
        RowSpan span = submodule_piece_span(*ring, fm, kept, basis);
        while (at < cands.size() && cands[at].deg == d) {
            const ModuleVector& g = gens[cands[at].idx];
            auto coords = piece_coords(basis, g);
            if (span.insert(std::move(coords))) kept.push_back(g);
            ++at;
        }
    }
    return kept;
}

Resolution minimal_free_resolution(const PresentedModule& m, std::int64_t bound) {
    if (bound < 0) throw StructuralError("resolution bound must be nonnegative");
    const PolyRing& S = m.ring()->poly();
    const PresentedModule& m0 = minimal_presentation_cached(m);

    Resolution res;
    res.ring = m.ring();
    res.bound = bound;
    res.frees.push_back(m0.gens());
    if (m0.rels().empty()) {
        res.complete = true;
        return res;
    }
    if (bound == 0) return res;

    std::vector<ModuleVector> current = minimal_generators(m0.rels(), res.ring, m0.gens());
    while (true) {
        if (current.empty()) {
            res.complete = true;
            return res;
        }
        FreeModule next;
        for (const auto& c : current)
            next.twists.push_back(*mv_degree(S, res.frees.back(), c));
        res.diffs.push_back(current);
        res.frees.push_back(next);
        if (res.length() >= bound) return res;
        std::vector<ModuleVector> syz =
            syzygy_basis(current, res.ring, res.frees[res.frees.size() - 2]);
        current = minimal_generators(syz, res.ring, next);
    }
}

BettiTable betti_table(const Resolution& res) {
    BettiTable bt;
    for (std::size_t i = 0; i < res.frees.size(); ++i) {
        bt.total.push_back(static_cast<std::int64_t>(res.frees[i].rank()));
        for (auto t : res.frees[i].twists) ++bt.graded[{static_cast<std::int64_t>(i), t}];
    }
    return bt;
}

PresentedModule syzygy_module(const PresentedModule& m, std::int64_t n) {
    if (n < 0) throw StructuralError("syzygy index must be nonnegative");
    Resolution res = minimal_free_resolution(m, n + 1);
    if (n <= res.length() - 1)
        return PresentedModule(m.ring(), res.frees[static_cast<std::size_t>(n)],
                               res.diffs[static_cast<std::size_t>(n)]);
    if (!res.complete) throw StructuralError("syzygy: resolution truncated unexpectedly");
    if (n == res.length())
        return PresentedModule::free_module(m.ring(), res.frees.back());
    return PresentedModule::zero(m.ring());
}

PdCertificate pd_certificate(const PresentedModule& m, std::int64_t bound) {
    if (bound < 0) throw StructuralError("pd bound must be nonnegative");
    Resolution res = minimal_free_resolution(m, bound);
    PdCertificate cert;
    cert.bound = bound;
    if (res.complete) {
        cert.finite = true;
        cert.pd = res.length();
        // the zero module: no generators at all
        if (res.frees[0].rank() == 0) cert.pd = -1;
    }
    return cert;
}

PresentedModule view_over_ambient(const PresentedModule& m) {
    const RingPtr ambient = GradedRing::make(m.ring()->poly_ptr(), {});
    std::vector<ModuleVector> rels = m.rels();
    for (const auto& g : m.ring()->ideal_gb()) {
        for (std::size_t pos = 0; pos < m.rank0(); ++pos) {
            ModuleVector v(m.rank0());
            v[pos] = g;
            rels.push_back(std::move(v));
        }
    }
    return PresentedModule(ambient, m.gens(), std::move(rels));
}

std::int64_t ambient_pd(const PresentedModule& m) {
    const PresentedModule over_s = m.ring()->is_quotient() ? view_over_ambient(m) : m;
    const std::int64_t n = static_cast<std::int64_t>(m.ring()->poly().nvars());
    Resolution res = minimal_free_resolution(over_s, n + 1);
    if (!res.complete)
        throw StructuralError("ambient resolution did not terminate within #vars + 1");
    return res.length();
}

bool resolution_is_minimal(const Resolution& res) {
    for (const auto& d : res.diffs)
        for (const auto& col : d)
            for (std::size_t i = 0; i < col.rank(); ++i)
                if (!col[i].is_zero() && col[i].lead().mono.is_one()) return false;
    return true;
}

} // namespace depthlab
