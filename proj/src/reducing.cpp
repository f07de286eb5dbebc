#include "depthlab/reducing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "depthlab/graded_linalg.hpp"

namespace depthlab {

namespace {

// ---------------------------------------------------------------------
// graded-piece caches and linear maps between pieces
// ---------------------------------------------------------------------

struct PieceCache {
    const GradedRing* ring;
    const FreeModule* fm;
    const std::vector<ModuleVector>* rels;
    std::map<std::int64_t, PieceBasis> bases;
    std::map<std::int64_t, RowSpan> relspans;

    const PieceBasis& basis(std::int64_t d) {
        auto it = bases.find(d);
        if (it == bases.end())
            it = bases.emplace(d, free_piece_basis(*ring, *fm, d)).first;
        return it->second;
    }
    const RowSpan& relspan(std::int64_t d) {
        auto it = relspans.find(d);
        if (it == relspans.end())
            it = relspans.emplace(d, submodule_piece_span(*ring, *fm, *rels, basis(d))).first;
        return it->second;
    }
};

PieceCache cache_for(const PresentedModule& m) {
    return PieceCache{m.ring().get(), &m.gens(), &m.rels(), {}, {}};
}

// element of F0 from coordinates in the piece basis
ModuleVector element_from_coords(const PolyRing& S, const PieceBasis& basis,
                                 const std::vector<std::uint32_t>& coords,
                                 std::size_t rank) {
    std::vector<std::vector<Term>> terms(rank);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        terms[basis.elems[i].pos].push_back(
            Term{PrimeFieldElement(coords[i], S.modulus()), basis.elems[i].mono});
    }
    ModuleVector v(rank);
    for (std::size_t p = 0; p < rank; ++p) v[p] = S.from_terms(std::move(terms[p]));
    return v;
}

// ---------------------------------------------------------------------
// degree-0 hom space and Ext^1 cocycles, as explicit linear algebra
// ---------------------------------------------------------------------

// Unknown layout: one block per "source slot"; slot j holds coordinates of
// an element of the target piece at slot_degrees[j].
struct SlotSpace {
    std::vector<std::int64_t> degrees;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    void build(const std::vector<std::int64_t>& degs, PieceCache& pieces) {
        degrees = degs;
        offsets.clear();
        total = 0;
        for (auto d : degrees) {
            offsets.push_back(total);
            total += pieces.basis(d).dim();
        }
    }
};

// Linear conditions "sum_j coeff_j * elem_j lies in the relation span at
// degree e", stacked for several condition columns.
struct ConditionBuilder {
    const GradedRing& ring;
    PieceCache& pieces;
    const SlotSpace& slots;
    std::vector<std::vector<std::uint32_t>> rows;

    // cond[j] multiplies slot j; the result is compared against the
    // relation span in degree e
    void add_condition(const std::vector<Polynomial>& cond, std::int64_t e) {
        const PolyRing& S = ring.poly();
        const PieceBasis& tgt = pieces.basis(e);
        const RowSpan& span = pieces.relspan(e);
        std::vector<std::vector<std::uint32_t>> cols(slots.total);
        for (std::size_t j = 0; j < cond.size(); ++j) {
            if (cond[j].is_zero()) continue;
            const PieceBasis& src = pieces.basis(slots.degrees[j]);
            for (std::size_t bidx = 0; bidx < src.dim(); ++bidx) {
                const ModTerm& bt = src.elems[bidx];
                ModuleVector prod(slots_rank());
                prod[bt.pos] = S.mono_mul_poly(S.coeff(1), bt.mono, cond[j]);
                prod = ring.reduce(prod);
                std::vector<std::uint32_t> coords = piece_coords(tgt, prod);
                coords = span.reduce(std::move(coords));
                cols[slots.offsets[j] + bidx] = std::move(coords);
            }
        }
        for (std::size_t r = 0; r < tgt.dim(); ++r) {
            std::vector<std::uint32_t> row(slots.total, 0);
            bool nonzero = false;
            for (std::size_t c = 0; c < slots.total; ++c) {
                if (cols[c].empty()) continue;
                row[c] = cols[c][r];
                if (row[c]) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    std::size_t slots_rank() const { return pieces.fm->rank(); }

    std::vector<std::vector<std::uint32_t>> kernel() const {
        if (rows.empty()) {
            // whole space
            std::vector<std::vector<std::uint32_t>> basis;
            for (std::size_t i = 0; i < slots.total; ++i) {
                std::vector<std::uint32_t> v(slots.total, 0);
                v[i] = 1;
                basis.push_back(std::move(v));
            }
            return basis;
        }
        FpMatrix mat(rows.size(), slots.total, ring.poly().modulus());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < slots.total; ++c) mat.at(r, c) = rows[r][c];
        return kernel_basis(mat);
    }
};

} // namespace

std::vector<std::vector<ModuleVector>> hom_basis_degree0(const PresentedModule& a,
                                                         const PresentedModule& b) {
    if (!a.ring()->same_ring(*b.ring())) throw StructuralError("hom basis: ring mismatch");
    const GradedRing& ring = *a.ring();
    const PolyRing& S = ring.poly();
    PieceCache pieces = cache_for(b);

    SlotSpace slots;
    slots.build(a.gens().twists, pieces);
    if (slots.total == 0) return {};

    ConditionBuilder cb{ring, pieces, slots, {}};
    for (const auto& rel : a.rels()) {
        auto e = mv_degree(S, a.gens(), rel);
        std::vector<Polynomial> coeffs;
        for (std::size_t j = 0; j < a.rank0(); ++j) coeffs.push_back(rel[j]);
        cb.add_condition(coeffs, *e);
    }
    std::vector<std::vector<std::uint32_t>> z = cb.kernel();

    // quotient out matrices that are zero as maps (images inside rel spans)
    RowSpan modded(S.modulus(), slots.total);
    for (std::size_t j = 0; j < a.rank0(); ++j) {
        const RowSpan& span = pieces.relspan(slots.degrees[j]);
        for (const auto& row : span.rows()) {
            std::vector<std::uint32_t> v(slots.total, 0);
            std::copy(row.begin(), row.end(), v.begin() + slots.offsets[j]);
            modded.insert(std::move(v));
        }
    }

    std::vector<std::vector<ModuleVector>> result;
    for (auto& zv : z) {
        if (!modded.insert(std::vector<std::uint32_t>(zv))) continue;
        std::vector<ModuleVector> cols;
        for (std::size_t j = 0; j < a.rank0(); ++j) {
            const PieceBasis& pb = pieces.basis(slots.degrees[j]);
            std::vector<std::uint32_t> coords(pb.dim());
            for (std::size_t i = 0; i < pb.dim(); ++i) coords[i] = zv[slots.offsets[j] + i];
            cols.push_back(element_from_coords(S, pb, coords, b.rank0()));
        }
        result.push_back(std::move(cols));
    }
    return result;
}

std::optional<PMMap> find_graded_iso(const PresentedModule& a, const PresentedModule& b) {
    const PolyRing& S = a.ring()->poly();
    // cheap graded-dimension screen
    std::int64_t dmin = INT64_MAX, dmax = INT64_MIN;
    auto widen = [&](const PresentedModule& m) {
        for (auto t : m.gens().twists) {
            dmin = std::min(dmin, t);
            dmax = std::max(dmax, t);
        }
        for (const auto& r : m.rels()) {
            auto d = mv_degree(S, m.gens(), r);
            if (d) dmax = std::max(dmax, *d);
        }
    };
    widen(a);
    widen(b);
    if (dmin > dmax) return is_zero_module(a) && is_zero_module(b)
                                ? std::optional<PMMap>(identity_map(a))
                                : std::nullopt;
    for (std::int64_t d = dmin; d <= dmax + 2; ++d)
        if (graded_dim(a, d) != graded_dim(b, d)) return std::nullopt;

    std::vector<std::vector<ModuleVector>> basis = hom_basis_degree0(a, b);
    if (basis.empty()) return std::nullopt;

    auto try_candidate = [&](const std::vector<ModuleVector>& cols) -> std::optional<PMMap> {
        try {
            PMMap phi = make_map(a, b, cols);
            if (is_surjective(phi) && is_injective(phi)) return phi;
        } catch (const StructuralError&) {
        }
        return std::nullopt;
    };

    auto combine = [&](const std::vector<std::uint32_t>& coeffs) {
        std::vector<ModuleVector> cols(a.rank0(), ModuleVector(b.rank0()));
        for (std::size_t j = 0; j < a.rank0(); ++j)
            for (std::size_t p = 0; p < b.rank0(); ++p) cols[j][p] = S.zero();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const PrimeFieldElement c(coeffs[k], S.modulus());
            for (std::size_t j = 0; j < a.rank0(); ++j)
                cols[j] = mv_add(S, cols[j], mv_scale(S, c, basis[k][j]));
        }
        return cols;
    };

    // deterministic candidates: full sum, singles, then seeded combinations
    std::vector<std::uint32_t> ones(basis.size(), 1);
    if (auto hit = try_candidate(combine(ones))) return hit;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<std::uint32_t> e(basis.size(), 0);
        e[k] = 1;
        if (auto hit = try_candidate(combine(e))) return hit;
    }
    std::mt19937_64 rng(0xD5EEDull);
    for (int attempt = 0; attempt < 48; ++attempt) {
        std::vector<std::uint32_t> c(basis.size());
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % S.modulus());
        if (auto hit = try_candidate(combine(c))) return hit;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------

namespace {

PresentedModule canonical_right_module(const PresentedModule& k_prev, const ReducingStep& st) {
    PresentedModule omega = syzygy_module(k_prev, st.n);
    return direct_sum_copies(omega, st.right_twists);
}

PresentedModule canonical_left_module(const PresentedModule& k_prev, const ReducingStep& st) {
    return direct_sum_copies(k_prev, st.left_twists);
}

} // namespace

VerifyResult verify_reducing_sequence(const ReducingSequence& seq, std::int64_t pd_bound) {
    VerifyResult out;
    if (seq.modules.size() != seq.steps.size() + 1) {
        out.failure = StepFailure{0, "shape", "module list does not match step count"};
        return out;
    }
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const std::int64_t stepno = static_cast<std::int64_t>(i) + 1;
        const ReducingStep& st = seq.steps[i];
        if (st.a() < 1 || st.b() < 1 || st.n < 0) {
            out.failure = StepFailure{stepno, "shape", "need a >= 1, b >= 1, n >= 0"};
            return out;
        }
        const PresentedModule& prev = seq.modules[i];
        const PresentedModule& mid = seq.modules[i + 1];

        std::optional<PMMap> left, right;
        try {
            left = make_map(canonical_left_module(prev, st), mid, st.left_cols);
            right = make_map(mid, canonical_right_module(prev, st), st.right_cols);
        } catch (const StructuralError& e) {
            out.failure = StepFailure{stepno, "shape", e.what()};
            return out;
        }

        // composite zero
        PMMap comp = compose(*right, *left);
        for (const auto& col : comp.cols) {
            if (!is_member(col, right->tgt.rel_gb())) {
                out.failure = StepFailure{stepno, "composite-zero", "right after left is not zero"};
                return out;
            }
        }
        if (!is_injective(*left)) {
            out.failure = StepFailure{stepno, "left-injective", "kernel of the left map is nonzero"};
            return out;
        }
        if (!is_surjective(*right)) {
            out.failure =
                StepFailure{stepno, "right-surjective", "cokernel of the right map is nonzero"};
            return out;
        }
        // middle exactness: ker(right) inside im(left) (as submodules of F0(mid))
        KernelData kd = kernel_of_map(*right);
        std::vector<ModuleVector> image_gens = left->cols;
        for (const auto& r : mid.rels()) image_gens.push_back(r);
        SubmoduleGB image_gb = buchberger(image_gens, mid.ring(), mid.gens());
        for (const auto& u : kd.numerator) {
            if (!is_member(u, image_gb)) {
                out.failure =
                    StepFailure{stepno, "middle-exact", "kernel of right map escapes the image"};
                return out;
            }
        }
    }

    out.tail = pd_certificate(seq.modules.back(), pd_bound);
    if (!out.tail.finite || out.tail.pd > pd_bound) {
        out.failure = StepFailure{seq.r(), "tail-pd",
                                  "pd of the last module is not certified <= " +
                                      std::to_string(pd_bound)};
        return out;
    }
    out.ok = true;
    out.red_pd_bound = seq.r();
    return out;
}

// ---------------------------------------------------------------------
// search
// ---------------------------------------------------------------------

namespace {

struct ExtClassSpace {
    // explicit cocycle representatives: per class, per F1(C) index, an
    // element of F0(M) of the right degree
    std::vector<std::vector<ModuleVector>> classes;
};

// Ext^1(C, M(t))_0 cocycles. f1 = columns of the minimal presentation of C,
// f2 = their minimal syzygies.
ExtClassSpace ext1_cocycles(const PresentedModule& c, const std::vector<ModuleVector>& f2,
                            const std::vector<std::int64_t>& f2_degrees,
                            const PresentedModule& m, std::int64_t t) {
    const GradedRing& ring = *m.ring();
    const PolyRing& S = ring.poly();
    ExtClassSpace out;

    PieceCache pieces = cache_for(m);
    std::vector<std::int64_t> slot_degrees;
    for (const auto& rel : c.rels()) {
        auto d = mv_degree(S, c.gens(), rel);
        slot_degrees.push_back(*d + t);
    }
    SlotSpace slots;
    slots.build(slot_degrees, pieces);
    if (slots.total == 0) return out;

    ConditionBuilder cb{ring, pieces, slots, {}};
    for (std::size_t s = 0; s < f2.size(); ++s) {
        std::vector<Polynomial> coeffs;
        for (std::size_t j = 0; j < c.rels().size(); ++j) coeffs.push_back(f2[s][j]);
        cb.add_condition(coeffs, f2_degrees[s] + t);
    }
    std::vector<std::vector<std::uint32_t>> z = cb.kernel();
    if (z.empty()) return out;

    // mod out: per-slot relation spans and coboundaries psi . d1
    RowSpan modded(S.modulus(), slots.total);
    for (std::size_t j = 0; j < slot_degrees.size(); ++j) {
        const RowSpan& span = pieces.relspan(slot_degrees[j]);
        for (const auto& row : span.rows()) {
            std::vector<std::uint32_t> v(slots.total, 0);
            std::copy(row.begin(), row.end(), v.begin() + slots.offsets[j]);
            modded.insert(std::move(v));
        }
    }
    for (std::size_t u = 0; u < c.rank0(); ++u) {
        const std::int64_t du = c.gens().twists[u] + t;
        const PieceBasis& pb = pieces.basis(du);
        for (std::size_t g = 0; g < pb.dim(); ++g) {
            // psi sends C-generator u to basis element g; coboundary is
            // psi applied to each relation column
            std::vector<std::uint32_t> v(slots.total, 0);
            bool nonzero = false;
            for (std::size_t j = 0; j < c.rels().size(); ++j) {
                const Polynomial& coeff = c.rels()[j][u];
                if (coeff.is_zero()) continue;
                ModuleVector prod(m.rank0());
                prod[pb.elems[g].pos] =
                    S.mono_mul_poly(S.coeff(1), pb.elems[g].mono, coeff);
                prod = ring.reduce(prod);
                const PieceBasis& slot_pb = pieces.basis(slot_degrees[j]);
                auto coords = piece_coords(slot_pb, prod);
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    v[slots.offsets[j] + i] = coords[i];
                    if (coords[i]) nonzero = true;
                }
            }
            if (nonzero) modded.insert(std::move(v));
        }
    }

    for (auto& zv : z) {
        if (!modded.insert(std::vector<std::uint32_t>(zv))) continue;
        std::vector<ModuleVector> rep;
        for (std::size_t j = 0; j < slot_degrees.size(); ++j) {
            const PieceBasis& pb = pieces.basis(slot_degrees[j]);
            std::vector<std::uint32_t> coords(pb.dim());
            for (std::size_t i = 0; i < pb.dim(); ++i) coords[i] = zv[slots.offsets[j] + i];
            rep.push_back(element_from_coords(S, pb, coords, m.rank0()));
        }
        out.classes.push_back(std::move(rep));
    }
    return out;
}

struct SearchContext {
    const SearchBudgets& budgets;
    std::int64_t nodes = 0;

    bool spent() const { return nodes > 4096; }
};

struct StepCandidate {
    PresentedModule middle;
    ReducingStep step;
};

// middle term built from an extension class: K = (A + free cover of C) / mix
StepCandidate build_extension_candidate(const PresentedModule& m, const PresentedModule& c,
                                        std::int64_t n,
                                        const std::vector<std::int64_t>& twists,
                                        const std::vector<std::vector<ModuleVector>>& cocycle,
                                        std::int64_t b) {
    const RingPtr& ring = m.ring();
    const PolyRing& S = ring->poly();
    const std::size_t a = twists.size();
    const std::size_t mrank = m.rank0();
    const std::size_t crank = c.rank0();
    const std::size_t total = a * mrank + crank;

    FreeModule gens;
    for (std::size_t s = 0; s < a; ++s)
        for (auto tw : m.gens().twists) gens.twists.push_back(tw - twists[s]);
    for (auto tw : c.gens().twists) gens.twists.push_back(tw);

    std::vector<ModuleVector> rels;
    for (std::size_t s = 0; s < a; ++s) {
        for (const auto& r : m.rels()) {
            ModuleVector big(total);
            for (std::size_t i = 0; i < mrank; ++i) big[s * mrank + i] = r[i];
            rels.push_back(std::move(big));
        }
    }
    for (std::size_t j = 0; j < c.rels().size(); ++j) {
        ModuleVector big(total);
        for (std::size_t s = 0; s < a; ++s) {
            if (cocycle[s].empty()) continue;
            const ModuleVector& w = cocycle[s][j];
            for (std::size_t i = 0; i < mrank; ++i) big[s * mrank + i] = S.neg(w[i]);
        }
        for (std::size_t i = 0; i < crank; ++i) big[a * mrank + i] = c.rels()[j][i];
        rels.push_back(std::move(big));
    }
    PresentedModule middle(ring, std::move(gens), std::move(rels));

    ReducingStep st;
    st.n = n;
    st.left_twists = twists;
    st.right_twists.assign(static_cast<std::size_t>(b), 0);
    for (std::size_t s = 0; s < a; ++s) {
        for (std::size_t i = 0; i < mrank; ++i) {
            ModuleVector col(total);
            col[s * mrank + i] = S.one();
            st.left_cols.push_back(std::move(col));
        }
    }
    for (std::size_t col_i = 0; col_i < total; ++col_i) {
        ModuleVector col(crank);
        if (col_i >= a * mrank) col[col_i - a * mrank] = S.one();
        st.right_cols.push_back(std::move(col));
    }
    return StepCandidate{std::move(middle), std::move(st)};
}

// middle term = free cover of C, valid when Omega(C) matches a twisted sum
// of copies of M
std::optional<StepCandidate> build_free_cover_candidate(const PresentedModule& m,
                                                        const PresentedModule& c,
                                                        const PresentedModule& omega_next,
                                                        std::int64_t n, std::int64_t b,
                                                        std::int64_t max_ab) {
    const RingPtr& ring = m.ring();
    const PolyRing& S = ring->poly();
    if (m.rank0() == 0 || omega_next.rank0() == 0) return std::nullopt;
    if (omega_next.rank0() % m.rank0() != 0) return std::nullopt;
    const std::size_t a = omega_next.rank0() / m.rank0();
    if (a < 1 || static_cast<std::int64_t>(a) > max_ab) return std::nullopt;

    // peel twist multiset: smallest remaining degree matches the smallest
    // generator degree of M
    std::vector<std::int64_t> mdeg = m.gens().twists;
    std::sort(mdeg.begin(), mdeg.end());
    std::multiset<std::int64_t> remaining(omega_next.gens().twists.begin(),
                                          omega_next.gens().twists.end());
    std::vector<std::int64_t> twists;
    while (!remaining.empty()) {
        const std::int64_t w = *remaining.begin();
        const std::int64_t tau = mdeg.front() - w; // copy M(tau) has degrees mdeg - tau
        for (auto g : mdeg) {
            auto it = remaining.find(g - tau);
            if (it == remaining.end()) return std::nullopt;
            remaining.erase(it);
        }
        twists.push_back(tau);
    }
    PresentedModule a_sum = direct_sum_copies(m, twists);
    std::optional<PMMap> iso = find_graded_iso(a_sum, omega_next);
    if (!iso) return std::nullopt;

    // K = free cover of C; left = inclusion of Omega(C) through the iso
    PresentedModule cover = PresentedModule::free_module(ring, c.gens());
    ReducingStep st;
    st.n = n;
    st.left_twists = twists;
    st.right_twists.assign(static_cast<std::size_t>(b), 0);
    for (std::size_t j = 0; j < a_sum.rank0(); ++j) {
        // iso column j is a combination of omega_next generators, i.e. of
        // the relation columns of C viewed inside the cover
        ModuleVector col(c.rank0());
        const ModuleVector& w = iso->cols[j];
        for (std::size_t g = 0; g < omega_next.rank0(); ++g) {
            if (w[g].is_zero()) continue;
            col = mv_add(S, col, mv_poly_mul(S, w[g], c.rels()[g]));
        }
        st.left_cols.push_back(ring->reduce(col));
    }
    for (std::size_t j = 0; j < c.rank0(); ++j) {
        ModuleVector col(c.rank0());
        col[j] = S.one();
        st.right_cols.push_back(std::move(col));
    }
    return StepCandidate{std::move(cover), std::move(st)};
}

bool chain_search(const PresentedModule& m, std::int64_t depth, SearchContext& ctx,
                  std::vector<PresentedModule>& modules, std::vector<ReducingStep>& steps);

bool try_candidate_chain(const StepCandidate& cand, std::int64_t depth, SearchContext& ctx,
                         std::vector<PresentedModule>& modules,
                         std::vector<ReducingStep>& steps) {
    ++ctx.nodes;
    if (depth == 1) {
        PdCertificate pd = pd_certificate(cand.middle, ctx.budgets.pd_bound);
        if (pd.finite && pd.pd <= ctx.budgets.pd_bound) {
            modules.push_back(cand.middle);
            steps.push_back(cand.step);
            return true;
        }
        return false;
    }
    modules.push_back(cand.middle);
    steps.push_back(cand.step);
    if (chain_search(cand.middle, depth - 1, ctx, modules, steps)) return true;
    modules.pop_back();
    steps.pop_back();
    return false;
}

bool chain_search(const PresentedModule& m, std::int64_t depth, SearchContext& ctx,
                  std::vector<PresentedModule>& modules, std::vector<ReducingStep>& steps) {
    const SearchBudgets& budgets = ctx.budgets;
    for (std::int64_t n = 0; n <= budgets.max_n && !ctx.spent(); ++n) {
        // canonical syzygy data per n, shared across (a, b)
        std::map<std::int64_t, PresentedModule> c_by_b;
        std::map<std::int64_t, PresentedModule> omega_next_by_b;
        auto c_of = [&](std::int64_t b) -> const PresentedModule& {
            auto it = c_by_b.find(b);
            if (it == c_by_b.end()) {
                PresentedModule omega = syzygy_module(m, n);
                it = c_by_b
                         .emplace(b, direct_sum_copies(
                                         omega, std::vector<std::int64_t>(
                                                    static_cast<std::size_t>(b), 0)))
                         .first;
            }
            return it->second;
        };
        auto omega_next_of = [&](std::int64_t b) -> const PresentedModule& {
            auto it = omega_next_by_b.find(b);
            if (it == omega_next_by_b.end()) {
                PresentedModule omega = syzygy_module(m, n + 1);
                it = omega_next_by_b
                         .emplace(b, direct_sum_copies(
                                         omega, std::vector<std::int64_t>(
                                                    static_cast<std::size_t>(b), 0)))
                         .first;
            }
            return it->second;
        };

        for (std::int64_t ab = 2; ab <= 2 * budgets.max_ab && !ctx.spent(); ++ab) {
            for (std::int64_t a = 1; a < ab && !ctx.spent(); ++a) {
                const std::int64_t b = ab - a;
                if (a > budgets.max_ab || b < 1 || b > budgets.max_ab) continue;
                const PresentedModule& c = c_of(b);
                if (c.rank0() == 0) continue;

                // canonical free-cover splice, when the syzygy matches
                if (static_cast<std::int64_t>(omega_next_of(b).rank0()) ==
                    a * static_cast<std::int64_t>(m.rank0())) {
                    auto cand = build_free_cover_candidate(m, c, omega_next_of(b), n, b,
                                                           budgets.max_ab);
                    if (cand && static_cast<std::int64_t>(cand->step.left_twists.size()) == a) {
                        if (try_candidate_chain(*cand, depth, ctx, modules, steps)) return true;
                    }
                }

                // extension classes in Ext^1(C, sum of M(t_j))
                std::vector<ModuleVector> f2_raw = syzygy_basis(c.rels(), m.ring(), c.gens());
                std::vector<ModuleVector> f2 =
                    minimal_generators(f2_raw, m.ring(),
                                       FreeModule{[&] {
                                           std::vector<std::int64_t> tw;
                                           for (const auto& rl : c.rels())
                                               tw.push_back(*mv_degree(m.ring()->poly(),
                                                                        c.gens(), rl));
                                           return tw;
                                       }()});
                std::vector<std::int64_t> f2_degs;
                {
                    FreeModule f1;
                    for (const auto& rl : c.rels())
                        f1.twists.push_back(*mv_degree(m.ring()->poly(), c.gens(), rl));
                    for (const auto& v : f2)
                        f2_degs.push_back(*mv_degree(m.ring()->poly(), f1, v));
                }

                // candidate uniform twist values: generator degree minus
                // relation degree, over all pairs
                std::set<std::int64_t> tset;
                for (auto g : m.gens().twists)
                    for (const auto& rl : c.rels())
                        tset.insert(g - *mv_degree(m.ring()->poly(), c.gens(), rl));
                std::vector<std::int64_t> tvals(tset.begin(), tset.end());

                std::map<std::int64_t, ExtClassSpace> ext_by_t;
                auto ext_of = [&](std::int64_t t) -> const ExtClassSpace& {
                    auto it = ext_by_t.find(t);
                    if (it == ext_by_t.end())
                        it = ext_by_t.emplace(t, ext1_cocycles(c, f2, f2_degs, m, t)).first;
                    return it->second;
                };

                // twist multisets of size a over tvals (non-decreasing
                // tuples), capped
                std::vector<std::vector<std::int64_t>> multisets;
                std::vector<std::int64_t> cur;
                std::function<void(std::size_t)> gen = [&](std::size_t start) {
                    if (multisets.size() >= 64) return;
                    if (static_cast<std::int64_t>(cur.size()) == a) {
                        multisets.push_back(cur);
                        return;
                    }
                    for (std::size_t i = start; i < tvals.size(); ++i) {
                        cur.push_back(tvals[i]);
                        gen(i);
                        cur.pop_back();
                    }
                };
                gen(0);

                for (const auto& ts : multisets) {
                    if (ctx.spent()) break;
                    // slot class dimensions
                    std::vector<std::size_t> dims;
                    bool usable = true;
                    for (auto t : ts) {
                        dims.push_back(ext_of(t).classes.size());
                        if (ext_of(t).classes.empty() && a == 1) usable = false;
                    }
                    if (!usable) continue;
                    const std::size_t dtotal =
                        static_cast<std::size_t>(std::accumulate(dims.begin(), dims.end(),
                                                                 std::size_t{0}));
                    // enumerate class tuples as 0/1 masks over the
                    // concatenated basis: zero first, singles, diagonal,
                    // then by popcount
                    std::vector<std::vector<std::uint32_t>> masks;
                    masks.emplace_back(dtotal, 0);
                    for (std::size_t i = 0; i < dtotal; ++i) {
                        std::vector<std::uint32_t> v(dtotal, 0);
                        v[i] = 1;
                        masks.push_back(std::move(v));
                    }
                    {
                        // diagonal pattern: slot s takes its s-th basis class
                        std::vector<std::uint32_t> v(dtotal, 0);
                        std::size_t off = 0;
                        bool ok = true;
                        for (std::size_t s = 0; s < dims.size(); ++s) {
                            if (s >= dims[s]) {
                                ok = false;
                                break;
                            }
                            v[off + s] = 1;
                            off += dims[s];
                        }
                        if (ok && dims.size() > 1) masks.push_back(std::move(v));
                    }
                    if (dtotal <= 16) {
                        std::vector<std::uint64_t> bitmasks;
                        for (std::uint64_t bm = 0; bm < (1ull << dtotal); ++bm)
                            if (__builtin_popcountll(bm) >= 2) bitmasks.push_back(bm);
                        std::sort(bitmasks.begin(), bitmasks.end(),
                                  [](std::uint64_t x, std::uint64_t y) {
                                      const int px = __builtin_popcountll(x),
                                                py = __builtin_popcountll(y);
                                      if (px != py) return px < py;
                                      return x < y;
                                  });
                        for (auto bm : bitmasks) {
                            std::vector<std::uint32_t> v(dtotal, 0);
                            for (std::size_t i = 0; i < dtotal; ++i)
                                if (bm & (1ull << i)) v[i] = 1;
                            masks.push_back(std::move(v));
                        }
                    }
                    if (static_cast<std::int64_t>(masks.size()) > budgets.class_budget)
                        masks.resize(static_cast<std::size_t>(budgets.class_budget));

                    for (const auto& mask : masks) {
                        if (ctx.spent()) break;
                        // decode per-slot cocycles
                        std::vector<std::vector<ModuleVector>> cocycle(ts.size());
                        std::size_t off = 0;
                        const PolyRing& S = m.ring()->poly();
                        for (std::size_t s = 0; s < ts.size(); ++s) {
                            const ExtClassSpace& es = ext_of(ts[s]);
                            std::vector<ModuleVector> acc;
                            for (std::size_t ci = 0; ci < dims[s]; ++ci) {
                                if (mask[off + ci] == 0) continue;
                                if (acc.empty()) {
                                    acc = es.classes[ci];
                                } else {
                                    for (std::size_t j = 0; j < acc.size(); ++j)
                                        acc[j] = mv_add(S, acc[j], es.classes[ci][j]);
                                }
                            }
                            if (acc.empty())
                                acc.assign(c.rels().size(), ModuleVector(m.rank0()));
                            cocycle[s] = std::move(acc);
                            off += dims[s];
                        }
                        StepCandidate cand =
                            build_extension_candidate(m, c, n, ts, cocycle, b);
                        if (try_candidate_chain(cand, depth, ctx, modules, steps)) return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace

SearchResult search_reducing_sequence(const PresentedModule& m, const SearchBudgets& budgets) {
    SearchResult out;
    SearchContext ctx{budgets, 0};
    const PresentedModule m0 = minimal_presentation(m);

    // depth 0: finite pd within the bound
    PdCertificate base = pd_certificate(m0, budgets.pd_bound);
    if (base.finite && base.pd <= budgets.pd_bound) {
        ReducingSequence seq;
        seq.modules.push_back(m0);
        out.found = std::move(seq);
        out.certificate = verify_reducing_sequence(*out.found, budgets.pd_bound);
        out.nodes_explored = ctx.nodes;
        return out;
    }

    for (std::int64_t depth = 1; depth <= budgets.max_r; ++depth) {
        std::vector<PresentedModule> modules{m0};
        std::vector<ReducingStep> steps;
        if (chain_search(m0, depth, ctx, modules, steps)) {
            ReducingSequence seq;
            seq.modules = std::move(modules);
            seq.steps = std::move(steps);
            VerifyResult v = verify_reducing_sequence(seq, budgets.pd_bound);
            if (v.ok) {
                out.found = std::move(seq);
                out.certificate = std::move(v);
                out.nodes_explored = ctx.nodes;
                return out;
            }
        }
    }
    out.nodes_explored = ctx.nodes;
    out.note = "no certificate within budgets";
    return out;
}

} // namespace depthlab
