#include "depthlab/chain_complex.hpp"

#include <algorithm>

namespace depthlab {

ChainComplex::ChainComplex(RingPtr ring, std::int64_t lo, std::vector<PresentedModule> terms,
                           std::vector<std::vector<ModuleVector>> diffs,
                           std::int64_t trusted_hi, std::optional<std::int64_t> trusted_lo)
    : ring_(std::move(ring)), lo_(lo), trusted_hi_(trusted_hi),
      trusted_lo_(trusted_lo.value_or(lo)), terms_(std::move(terms)),
      diffs_(std::move(diffs)) {
    if (terms_.empty()) throw StructuralError("chain complex needs at least one term");
    if (diffs_.size() + 1 != terms_.size())
        throw StructuralError("chain complex: differential count mismatch");
    if (trusted_hi_ > hi()) trusted_hi_ = hi();
    if (trusted_lo_ < lo_) trusted_lo_ = lo_;
    validate();
}

const PresentedModule& ChainComplex::term(std::int64_t i) const {
    if (!in_window(i)) throw WindowError("term outside complex window");
    return terms_[static_cast<std::size_t>(i - lo_)];
}

const std::vector<ModuleVector>& ChainComplex::diff(std::int64_t i) const {
    if (i <= lo() || i > hi()) throw WindowError("differential outside complex window");
    return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

void ChainComplex::validate() const {
    const PolyRing& S = ring_->poly();
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const PresentedModule& src = terms_[k + 1];
        const PresentedModule& tgt = terms_[k];
        const auto& cols = diffs_[k];
        if (cols.size() != src.rank0())
            throw StructuralError("differential column count mismatch");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].rank() != tgt.rank0())
                throw StructuralError("differential column rank mismatch");
            if (cols[j].is_zero()) continue;
            auto d = mv_degree(S, tgt.gens(), cols[j]);
            if (!d || *d != src.gens().twists[j])
                throw StructuralError("differential entry not homogeneous of matching degree");
        }
        // d kills source relations (well-defined on the presented module)
        for (const auto& r : src.rels()) {
            ModuleVector img(tgt.rank0());
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (!r[j].is_zero()) img = mv_add(S, img, mv_poly_mul(S, r[j], cols[j]));
            if (!is_member(ring_->reduce(img), tgt.rel_gb()))
                throw StructuralError("differential not well-defined on presented module");
        }
    }
    // d compose d = 0 into the presented module two steps down
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        const PresentedModule& tgt = terms_[k];
        const auto& d_low = diffs_[k];
        const auto& d_high = diffs_[k + 1];
        for (const auto& col : d_high) {
            ModuleVector img(tgt.rank0());
            for (std::size_t j = 0; j < d_low.size(); ++j)
                if (!col[j].is_zero()) img = mv_add(S, img, mv_poly_mul(S, col[j], d_low[j]));
            if (!is_member(ring_->reduce(img), tgt.rel_gb()))
                throw StructuralError("d o d != 0");
        }
    }
}

ChainComplex shift_complex(const ChainComplex& x, std::int64_t s) {
    const PolyRing& S = x.ring()->poly();
    std::vector<PresentedModule> terms;
    std::vector<std::vector<ModuleVector>> diffs;
    for (std::int64_t i = x.lo(); i <= x.hi(); ++i) terms.push_back(x.term(i));
    const bool negate = (s % 2) != 0;
    for (std::int64_t i = x.lo() + 1; i <= x.hi(); ++i) {
        std::vector<ModuleVector> cols = x.diff(i);
        if (negate)
            for (auto& c : cols) c = mv_neg(S, c);
        diffs.push_back(std::move(cols));
    }
    ChainComplex out(x.ring(), x.lo() + s, std::move(terms), std::move(diffs),
                     x.trusted_hi() + s, x.trusted_lo() + s);
    out.certified_sup = x.certified_sup ? std::optional<std::int64_t>(*x.certified_sup + s)
                                        : std::nullopt;
    out.certified_exact = x.certified_exact;
    return out;
}

PresentedModule homology_at(const ChainComplex& x, std::int64_t i) {
    if (i < x.trusted_lo() || i > x.trusted_hi())
        throw WindowError("homology requested outside the trusted window [" +
                          std::to_string(x.trusted_lo()) + ", " +
                          std::to_string(x.trusted_hi()) + "]");
    const RingPtr& ring = x.ring();
    const PolyRing& S = ring->poly();
    const PresentedModule& xi = x.term(i);

    // numerator: generators of { u in F0(X_i) : d_i(u) in im rels(X_{i-1}) }
    std::vector<ModuleVector> numerator;
    if (i > x.lo()) {
        const PresentedModule& lower = x.term(i - 1);
        std::vector<ModuleVector> combined = x.diff(i);
        for (const auto& r : lower.rels()) combined.push_back(r);
        std::vector<ModuleVector> syz = syzygy_basis(combined, ring, lower.gens());
        for (const auto& s : syz) {
            ModuleVector u(xi.rank0());
            for (std::size_t c = 0; c < xi.rank0(); ++c) u[c] = s[c];
            if (!u.is_zero()) numerator.push_back(std::move(u));
        }
    } else {
        for (std::size_t j = 0; j < xi.rank0(); ++j) {
            ModuleVector e(xi.rank0());
            e[j] = S.one();
            numerator.push_back(std::move(e));
        }
    }
    if (numerator.empty()) return PresentedModule::zero(ring);

    FreeModule hfm;
    for (const auto& u : numerator) hfm.twists.push_back(*mv_degree(S, xi.gens(), u));

    // relations: { c : numerator * c in im d_{i+1} + im rels(X_i) }
    std::vector<ModuleVector> combined = numerator;
    if (i + 1 <= x.hi())
        for (const auto& c : x.diff(i + 1)) combined.push_back(c);
    for (const auto& r : xi.rels()) combined.push_back(r);
    std::vector<ModuleVector> syz = syzygy_basis(combined, ring, xi.gens());

    std::vector<ModuleVector> hrels;
    for (const auto& s : syz) {
        ModuleVector u(numerator.size());
        for (std::size_t c = 0; c < numerator.size(); ++c) u[c] = s[c];
        if (!u.is_zero()) hrels.push_back(std::move(u));
    }
    return minimal_presentation(PresentedModule(ring, std::move(hfm), std::move(hrels)));
}

void certify_sup_by_scan(ChainComplex& x) {
    if (!x.fully_trusted())
        throw WindowError("sup scan requires a fully trusted complex");
    x.certified_sup = std::nullopt;
    x.certified_exact = false;
    for (std::int64_t i = x.hi(); i >= x.lo(); --i) {
        if (!is_zero_module(homology_at(x, i))) {
            x.certified_sup = i;
            return;
        }
    }
    x.certified_exact = true;
}

KoszulComplex koszul(const RingPtr& ring, std::vector<Polynomial> elements) {
    const PolyRing& S = ring->poly();
    std::vector<Polynomial> xs;
    std::vector<std::int64_t> degs;
    for (auto& e : elements) {
        Polynomial r = ring->reduce(e);
        if (!r.is_zero()) {
            auto d = S.homogeneous_degree(r);
            if (!d) throw StructuralError("Koszul complex needs homogeneous elements");
            if (*d == 0) throw StructuralError("Koszul complex element is a unit");
            degs.push_back(*d);
        } else {
            degs.push_back(0);
        }
        xs.push_back(std::move(r));
    }
    const std::size_t c = xs.size();
    if (c == 0) throw StructuralError("Koszul complex on an empty list");

    // subsets of size p, ordered by ascending bitmask
    std::vector<std::vector<std::uint32_t>> subsets(c + 1);
    std::vector<std::size_t> index_of(static_cast<std::size_t>(1) << c, 0);
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        const std::size_t p = static_cast<std::size_t>(__builtin_popcount(mask));
        index_of[mask] = subsets[p].size();
        subsets[p].push_back(mask);
    }

    std::vector<PresentedModule> terms;
    std::vector<std::vector<ModuleVector>> diffs;
    for (std::size_t p = 0; p <= c; ++p) {
        FreeModule fm;
        for (auto mask : subsets[p]) {
            std::int64_t tw = 0;
            for (std::size_t i = 0; i < c; ++i)
                if (mask & (1u << i)) tw += degs[i];
            fm.twists.push_back(tw);
        }
        terms.push_back(PresentedModule::free_module(ring, std::move(fm)));
    }
    for (std::size_t p = 1; p <= c; ++p) {
        std::vector<ModuleVector> cols;
        for (auto mask : subsets[p]) {
            ModuleVector col(subsets[p - 1].size());
            int sign_count = 0;
            for (std::size_t i = 0; i < c; ++i) {
                if (!(mask & (1u << i))) continue;
                const std::uint32_t sub = mask & ~(1u << i);
                Polynomial entry = (sign_count % 2 == 0) ? xs[i] : S.neg(xs[i]);
                col[index_of[sub]] = S.add(col[index_of[sub]], entry);
                ++sign_count;
            }
            cols.push_back(std::move(col));
        }
        diffs.push_back(std::move(cols));
    }

    ChainComplex cx(ring, 0, std::move(terms), std::move(diffs), static_cast<std::int64_t>(c));
    return KoszulComplex{std::move(xs), std::move(cx)};
}

ChainComplex module_as_complex(const PresentedModule& m, std::int64_t at) {
    ChainComplex x(m.ring(), at, {m}, {}, at);
    if (is_zero_module(m)) {
        x.certified_exact = true;
    } else {
        x.certified_sup = at;
    }
    return x;
}

} // namespace depthlab
