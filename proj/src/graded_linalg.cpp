#include "depthlab/graded_linalg.hpp"

#include <algorithm>

namespace depthlab {

namespace {

void enumerate_rec(const PolyRing& S, std::size_t var, std::int64_t remaining,
                   std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
    if (var + 1 == S.nvars()) {
        const std::int64_t w = S.weights()[var];
        if (remaining % w == 0) {
            exps[var] = static_cast<std::uint32_t>(remaining / w);
            out.push_back(S.mono_make(exps));
            exps[var] = 0;
        }
        return;
    }
    const std::int64_t w = S.weights()[var];
    for (std::int64_t e = 0; e * w <= remaining; ++e) {
        exps[var] = static_cast<std::uint32_t>(e);
        enumerate_rec(S, var + 1, remaining - e * w, exps, out);
    }
    exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& S, std::int64_t d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<std::uint32_t> exps(S.nvars(), 0);
    enumerate_rec(S, 0, d, exps, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return S.mono_cmp(a, b) > 0; });
    return out;
}

std::vector<Monomial> standard_monomials(const GradedRing& R, std::int64_t d) {
    std::vector<Monomial> all = monomials_of_degree(R.poly(), d);
    if (!R.is_quotient()) return all;
    std::vector<Monomial> out;
    for (auto& m : all) {
        bool divisible = false;
        for (const auto& g : R.ideal_gb()) {
            if (R.poly().mono_divides(g.lead().mono, m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(std::move(m));
    }
    return out;
}

PieceBasis free_piece_basis(const GradedRing& R, const FreeModule& fm, std::int64_t d) {
    PieceBasis basis;
    basis.degree = d;
    for (std::size_t pos = 0; pos < fm.rank(); ++pos) {
        for (auto& m : standard_monomials(R, d - fm.twists[pos])) {
            basis.index[{pos, m.exps}] = basis.elems.size();
            basis.elems.push_back(ModTerm{pos, std::move(m)});
        }
    }
    return basis;
}

std::vector<std::uint32_t> piece_coords(const PieceBasis& basis, const ModuleVector& v) {
    std::vector<std::uint32_t> coords(basis.dim(), 0);
    for (std::size_t pos = 0; pos < v.rank(); ++pos) {
        for (const auto& t : v[pos].terms()) {
            auto it = basis.index.find({pos, t.mono.exps});
            if (it == basis.index.end())
                throw StructuralError("term outside graded piece basis");
            coords[it->second] = t.coeff.value();
        }
    }
    return coords;
}

RowSpan submodule_piece_span(const GradedRing& R, const FreeModule& fm,
                             const std::vector<ModuleVector>& gens, const PieceBasis& basis) {
    const PolyRing& S = R.poly();
    RowSpan span(S.modulus(), basis.dim());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto dg = mv_degree(S, fm, g);
        if (!dg) throw StructuralError("inhomogeneous generator in graded piece span");
        const std::int64_t shift = basis.degree - *dg;
        if (shift < 0) continue;
        for (const auto& m : standard_monomials(R, shift)) {
            ModuleVector prod = R.reduce(mv_mono_mul(S, S.coeff(1), m, g));
            if (prod.is_zero()) continue;
            span.insert(piece_coords(basis, prod));
        }
    }
    return span;
}

std::int64_t graded_dim(const PresentedModule& m, std::int64_t d) {
    const PieceBasis basis = free_piece_basis(*m.ring(), m.gens(), d);
    if (basis.dim() == 0) return 0;
    RowSpan span = submodule_piece_span(*m.ring(), m.gens(), m.rels(), basis);
    return static_cast<std::int64_t>(basis.dim() - span.dim());
}

std::vector<std::int64_t> graded_dims(const PresentedModule& m, std::int64_t lo,
                                      std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d) out.push_back(graded_dim(m, d));
    return out;
}

} // namespace depthlab
