#include "depthlab/homology.hpp"

namespace depthlab {

namespace {

// N^{rank(fm)} with per-copy twists added: generator (slot, t) for slot a
// generator of fm and t a generator of N.
PresentedModule sum_of_copies(const PresentedModule& n, const FreeModule& fm) {
    std::vector<std::int64_t> twists;
    twists.reserve(fm.rank());
    for (auto t : fm.twists) twists.push_back(-t);
    if (fm.rank() == 0) return PresentedModule::zero(n.ring());
    return direct_sum_copies(n, twists);
}

} // namespace

ChainComplex tensor_resolution(const Resolution& f, const PresentedModule& n) {
    if (!f.ring->same_ring(*n.ring())) throw StructuralError("tensor: ring mismatch");
    const std::size_t ngens = n.rank0();

    std::vector<PresentedModule> terms;
    for (const auto& fm : f.frees) terms.push_back(sum_of_copies(n, fm));

    std::vector<std::vector<ModuleVector>> diffs;
    for (std::size_t step = 0; step < f.diffs.size(); ++step) {
        const auto& d = f.diffs[step];
        const std::size_t tgt_rank = f.frees[step].rank() * ngens;
        std::vector<ModuleVector> cols;
        for (std::size_t j = 0; j < d.size(); ++j) {
            for (std::size_t t = 0; t < ngens; ++t) {
                ModuleVector col(tgt_rank);
                for (std::size_t i = 0; i < f.frees[step].rank(); ++i) {
                    if (d[j][i].is_zero()) continue;
                    col[i * ngens + t] = d[j][i];
                }
                cols.push_back(f.ring->reduce(col));
            }
        }
        diffs.push_back(std::move(cols));
    }

    const std::int64_t trusted =
        f.complete ? f.length() : std::max<std::int64_t>(0, f.length() - 1);
    return ChainComplex(f.ring, 0, std::move(terms), std::move(diffs), trusted);
}

ChainComplex hom_resolution(const Resolution& f, const PresentedModule& n) {
    if (!f.ring->same_ring(*n.ring())) throw StructuralError("hom: ring mismatch");
    const std::size_t ngens = n.rank0();
    const std::int64_t len = f.length();

    // position -i holds Hom(F_i, N); build terms from low to high: i = len..0
    std::vector<PresentedModule> terms;
    for (std::int64_t i = len; i >= 0; --i) {
        FreeModule dual;
        for (auto t : f.frees[static_cast<std::size_t>(i)].twists) dual.twists.push_back(-t);
        terms.push_back(sum_of_copies(n, dual));
    }

    // d_{-i} : Hom(F_i, N) -> Hom(F_{i+1}, N) is precomposition with d_{i+1}
    std::vector<std::vector<ModuleVector>> diffs;
    for (std::int64_t i = len - 1; i >= 0; --i) {
        const auto& d = f.diffs[static_cast<std::size_t>(i)]; // d_{i+1}: F_{i+1} -> F_i
        const std::size_t src_rank_f = f.frees[static_cast<std::size_t>(i)].rank();
        const std::size_t tgt_rank_f = f.frees[static_cast<std::size_t>(i + 1)].rank();
        std::vector<ModuleVector> cols;
        for (std::size_t j = 0; j < src_rank_f; ++j) {
            for (std::size_t t = 0; t < ngens; ++t) {
                ModuleVector col(tgt_rank_f * ngens);
                for (std::size_t u = 0; u < tgt_rank_f; ++u) {
                    // entry (u, j) of d_{i+1}
                    if (d[u][j].is_zero()) continue;
                    col[u * ngens + t] = d[u][j];
                }
                cols.push_back(f.ring->reduce(col));
            }
        }
        diffs.push_back(std::move(cols));
    }

    // truncated resolutions make the bottom edge (-len) unreliable
    const std::int64_t trusted_lo = f.complete ? -len : std::min<std::int64_t>(0, -len + 1);
    return ChainComplex(f.ring, -len, std::move(terms), std::move(diffs), 0, trusted_lo);
}

std::vector<PresentedModule> tor(const PresentedModule& m, const PresentedModule& n,
                                 std::int64_t b) {
    if (b < 0) throw StructuralError("tor range must be nonnegative");
    Resolution f = minimal_free_resolution(m, b + 1);
    ChainComplex x = tensor_resolution(f, n);
    std::vector<PresentedModule> out;
    for (std::int64_t i = 0; i <= b; ++i) {
        if (i > x.hi()) {
            out.push_back(PresentedModule::zero(m.ring()));
        } else {
            out.push_back(homology_at(x, i));
        }
    }
    return out;
}

std::vector<PresentedModule> ext(const PresentedModule& m, const PresentedModule& n,
                                 std::int64_t b) {
    if (b < 0) throw StructuralError("ext range must be nonnegative");
    Resolution f = minimal_free_resolution(m, b + 1);
    ChainComplex x = hom_resolution(f, n);
    std::vector<PresentedModule> out;
    for (std::int64_t i = 0; i <= b; ++i) {
        if (-i < x.lo()) {
            // the resolution ended before i: Ext^i vanishes
            out.push_back(PresentedModule::zero(m.ring()));
        } else {
            out.push_back(homology_at(x, -i));
        }
    }
    return out;
}

ChainComplex good_truncation_below(const ChainComplex& x, std::int64_t q) {
    if (q > x.hi()) throw WindowError("truncation point above window top");
    if (q > x.trusted_hi()) throw WindowError("truncation point above trusted window");
    if (q < x.lo()) {
        // nothing survives: a single zero term carries the (exact) complex
        ChainComplex out(x.ring(), q, {PresentedModule::zero(x.ring())}, {}, q);
        out.certified_exact = true;
        return out;
    }
    std::vector<PresentedModule> terms;
    std::vector<std::vector<ModuleVector>> diffs;
    for (std::int64_t i = x.lo(); i < q; ++i) terms.push_back(x.term(i));
    const PresentedModule& xq = x.term(q);
    if (q + 1 <= x.hi()) {
        std::vector<ModuleVector> rels = xq.rels();
        for (const auto& c : x.diff(q + 1)) rels.push_back(c);
        terms.push_back(PresentedModule(x.ring(), xq.gens(), std::move(rels)));
    } else {
        terms.push_back(xq);
    }
    for (std::int64_t i = x.lo() + 1; i <= q; ++i) diffs.push_back(x.diff(i));
    ChainComplex out(x.ring(), x.lo(), std::move(terms), std::move(diffs), q,
                     x.trusted_lo());
    if (x.certified_sup && *x.certified_sup <= q) out.certified_sup = x.certified_sup;
    out.certified_exact = x.certified_exact;
    return out;
}

namespace {

void require_free_complex(const ChainComplex& k) {
    for (std::int64_t i = k.lo(); i <= k.hi(); ++i)
        if (!k.term(i).rels().empty())
            throw StructuralError("combinator needs a complex of free modules");
}

void require_full_trust(const ChainComplex& x) {
    if (!x.fully_trusted())
        throw WindowError("combinator needs a fully trusted complex");
}

} // namespace

ChainComplex tensor_with_free_complex(const ChainComplex& x, const ChainComplex& k) {
    require_free_complex(k);
    require_full_trust(x);
    if (!x.ring()->same_ring(*k.ring())) throw StructuralError("tensor: ring mismatch");
    const RingPtr& ring = x.ring();
    const PolyRing& S = ring->poly();

    const std::int64_t lo = x.lo() + k.lo(), hi = x.hi() + k.hi();

    // generator layout at position m: blocks (q, p) with q + p = m, q
    // ascending; block (q, p) holds X_q tensor K_p
    struct Block {
        std::int64_t q, p;
        std::size_t offset; // generator offset in the direct sum
    };
    auto blocks_at = [&](std::int64_t mpos) {
        std::vector<Block> blocks;
        std::size_t off = 0;
        for (std::int64_t q = x.lo(); q <= x.hi(); ++q) {
            const std::int64_t p = mpos - q;
            if (p < k.lo() || p > k.hi()) continue;
            blocks.push_back(Block{q, p, off});
            off += x.term(q).rank0() * k.term(p).rank0();
        }
        return blocks;
    };

    auto term_at = [&](std::int64_t mpos) {
        std::vector<PresentedModule> parts;
        for (std::int64_t q = x.lo(); q <= x.hi(); ++q) {
            const std::int64_t p = mpos - q;
            if (p < k.lo() || p > k.hi()) continue;
            const PresentedModule& xq = x.term(q);
            const FreeModule& kp = k.term(p).gens();
            // X_q^{rank K_p}, one copy per K_p generator, interleaved so the
            // copy index is the minor index: gen (i_x, i_k) -> i_x * rk + i_k
            FreeModule fm;
            std::vector<ModuleVector> rels;
            const std::size_t rk = kp.rank();
            for (std::size_t ix = 0; ix < xq.rank0(); ++ix)
                for (std::size_t ik = 0; ik < rk; ++ik)
                    fm.twists.push_back(xq.gens().twists[ix] + kp.twists[ik]);
            for (const auto& r : xq.rels()) {
                for (std::size_t ik = 0; ik < rk; ++ik) {
                    ModuleVector big(fm.rank());
                    for (std::size_t ix = 0; ix < xq.rank0(); ++ix)
                        big[ix * rk + ik] = r[ix];
                    rels.push_back(std::move(big));
                }
            }
            parts.push_back(PresentedModule(ring, std::move(fm), std::move(rels)));
        }
        if (parts.empty()) return PresentedModule::zero(ring);
        return direct_sum(parts);
    };

    std::vector<PresentedModule> terms;
    for (std::int64_t mpos = lo; mpos <= hi; ++mpos) terms.push_back(term_at(mpos));

    std::vector<std::vector<ModuleVector>> diffs;
    for (std::int64_t mpos = lo + 1; mpos <= hi; ++mpos) {
        const auto src_blocks = blocks_at(mpos);
        const auto tgt_blocks = blocks_at(mpos - 1);
        const std::size_t tgt_rank = terms[static_cast<std::size_t>(mpos - 1 - lo)].rank0();
        auto tgt_offset = [&](std::int64_t q, std::int64_t p) -> std::int64_t {
            for (const auto& b : tgt_blocks)
                if (b.q == q && b.p == p) return static_cast<std::int64_t>(b.offset);
            return -1;
        };
        std::vector<ModuleVector> cols;
        for (const auto& blk : src_blocks) {
            const PresentedModule& xq = x.term(blk.q);
            const std::size_t rk = k.term(blk.p).rank0();
            for (std::size_t ix = 0; ix < xq.rank0(); ++ix) {
                for (std::size_t ik = 0; ik < rk; ++ik) {
                    ModuleVector col(tgt_rank);
                    // dX tensor 1 : block (q-1, p)
                    if (blk.q > x.lo()) {
                        const std::int64_t off = tgt_offset(blk.q - 1, blk.p);
                        const auto& dcol = x.diff(blk.q)[ix];
                        const std::size_t rk_tgt = rk;
                        for (std::size_t u = 0; u < x.term(blk.q - 1).rank0(); ++u) {
                            if (dcol[u].is_zero()) continue;
                            col[static_cast<std::size_t>(off) + u * rk_tgt + ik] = dcol[u];
                        }
                    }
                    // (-1)^q 1 tensor dK : block (q, p-1)
                    if (blk.p > k.lo()) {
                        const std::int64_t off = tgt_offset(blk.q, blk.p - 1);
                        const auto& dcol = k.diff(blk.p)[ik];
                        const std::size_t rk_low = k.term(blk.p - 1).rank0();
                        const bool neg = (blk.q % 2) != 0;
                        for (std::size_t u = 0; u < rk_low; ++u) {
                            const Polynomial& e = dcol[u];
                            if (e.is_zero()) continue;
                            Polynomial signed_e = neg ? S.neg(e) : e;
                            col[static_cast<std::size_t>(off) + ix * rk_low + u] =
                                S.add(col[static_cast<std::size_t>(off) + ix * rk_low + u],
                                      signed_e);
                        }
                    }
                    cols.push_back(ring->reduce(col));
                }
            }
        }
        diffs.push_back(std::move(cols));
    }
    return ChainComplex(ring, lo, std::move(terms), std::move(diffs), hi);
}

ChainComplex hom_from_free_complex(const ChainComplex& k, const ChainComplex& x) {
    require_free_complex(k);
    require_full_trust(x);
    if (!x.ring()->same_ring(*k.ring())) throw StructuralError("hom: ring mismatch");
    const RingPtr& ring = x.ring();
    const PolyRing& S = ring->poly();

    const std::int64_t lo = x.lo() - k.hi(), hi = x.hi() - k.lo();

    struct Block {
        std::int64_t q, p; // Hom(K_p, X_q) at q - p
        std::size_t offset;
    };
    auto blocks_at = [&](std::int64_t mpos) {
        std::vector<Block> blocks;
        std::size_t off = 0;
        for (std::int64_t q = x.lo(); q <= x.hi(); ++q) {
            const std::int64_t p = q - mpos;
            if (p < k.lo() || p > k.hi()) continue;
            blocks.push_back(Block{q, p, off});
            off += x.term(q).rank0() * k.term(p).rank0();
        }
        return blocks;
    };

    auto term_at = [&](std::int64_t mpos) {
        std::vector<PresentedModule> parts;
        for (std::int64_t q = x.lo(); q <= x.hi(); ++q) {
            const std::int64_t p = q - mpos;
            if (p < k.lo() || p > k.hi()) continue;
            const PresentedModule& xq = x.term(q);
            const FreeModule& kp = k.term(p).gens();
            FreeModule fm;
            std::vector<ModuleVector> rels;
            const std::size_t rk = kp.rank();
            for (std::size_t ix = 0; ix < xq.rank0(); ++ix)
                for (std::size_t ik = 0; ik < rk; ++ik)
                    fm.twists.push_back(xq.gens().twists[ix] - kp.twists[ik]);
            for (const auto& r : xq.rels()) {
                for (std::size_t ik = 0; ik < rk; ++ik) {
                    ModuleVector big(fm.rank());
                    for (std::size_t ix = 0; ix < xq.rank0(); ++ix)
                        big[ix * rk + ik] = r[ix];
                    rels.push_back(std::move(big));
                }
            }
            parts.push_back(PresentedModule(ring, std::move(fm), std::move(rels)));
        }
        if (parts.empty()) return PresentedModule::zero(ring);
        return direct_sum(parts);
    };

    std::vector<PresentedModule> terms;
    for (std::int64_t mpos = lo; mpos <= hi; ++mpos) terms.push_back(term_at(mpos));

    std::vector<std::vector<ModuleVector>> diffs;
    for (std::int64_t mpos = lo + 1; mpos <= hi; ++mpos) {
        const auto src_blocks = blocks_at(mpos);
        const auto tgt_blocks = blocks_at(mpos - 1);
        const std::size_t tgt_rank = terms[static_cast<std::size_t>(mpos - 1 - lo)].rank0();
        auto tgt_offset = [&](std::int64_t q, std::int64_t p) -> std::int64_t {
            for (const auto& b : tgt_blocks)
                if (b.q == q && b.p == p) return static_cast<std::int64_t>(b.offset);
            return -1;
        };
        std::vector<ModuleVector> cols;
        for (const auto& blk : src_blocks) {
            const PresentedModule& xq = x.term(blk.q);
            const std::size_t rk = k.term(blk.p).rank0();
            for (std::size_t ix = 0; ix < xq.rank0(); ++ix) {
                for (std::size_t ik = 0; ik < rk; ++ik) {
                    ModuleVector col(tgt_rank);
                    // dX after f : block (q-1, p), same K-generator
                    if (blk.q > x.lo() && blk.q - 1 - blk.p >= lo - 1) {
                        const std::int64_t off = tgt_offset(blk.q - 1, blk.p);
                        if (off >= 0) {
                            const auto& dcol = x.diff(blk.q)[ix];
                            for (std::size_t u = 0; u < x.term(blk.q - 1).rank0(); ++u) {
                                if (dcol[u].is_zero()) continue;
                                col[static_cast<std::size_t>(off) + u * rk + ik] = dcol[u];
                            }
                        }
                    }
                    // (-1)^{q-p+1} f after dK : block (q, p+1), transpose of dK
                    if (blk.p + 1 <= k.hi()) {
                        const std::int64_t off = tgt_offset(blk.q, blk.p + 1);
                        if (off >= 0) {
                            const auto& dk = k.diff(blk.p + 1); // K_{p+1} -> K_p
                            const std::size_t rk_hi = k.term(blk.p + 1).rank0();
                            const bool neg = ((blk.q - blk.p + 1) % 2) != 0;
                            for (std::size_t u = 0; u < rk_hi; ++u) {
                                const Polynomial& e = dk[u][ik]; // coeff of e_ik in dK(e_u)
                                if (e.is_zero()) continue;
                                Polynomial signed_e = neg ? S.neg(e) : e;
                                std::size_t pos = static_cast<std::size_t>(off) + ix * rk_hi + u;
                                col[pos] = S.add(col[pos], signed_e);
                            }
                        }
                    }
                    cols.push_back(ring->reduce(col));
                }
            }
        }
        diffs.push_back(std::move(cols));
    }
    return ChainComplex(ring, lo, std::move(terms), std::move(diffs), hi);
}

} // namespace depthlab
