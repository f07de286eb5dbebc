#include "depthlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace depthlab {

ModuleOrder ModuleOrder::pot(const FreeModule& fm) {
    return elimination(fm, fm.rank());
}

ModuleOrder ModuleOrder::elimination(const FreeModule& fm, std::size_t main_rank) {
    // priority: main block before tail block, then twist ascending, then index
    std::vector<std::size_t> idx(fm.rank());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const bool tail_a = a >= main_rank, tail_b = b >= main_rank;
        if (tail_a != tail_b) return !tail_a;
        if (fm.twists[a] != fm.twists[b]) return fm.twists[a] < fm.twists[b];
        return a < b;
    });
    ModuleOrder ord;
    ord.rank_.resize(fm.rank());
    for (std::size_t r = 0; r < idx.size(); ++r) ord.rank_[idx[r]] = r;
    return ord;
}

int ModuleOrder::cmp(const PolyRing& S, const ModTerm& a, const ModTerm& b) const {
    if (a.pos != b.pos) {
        // smaller rank = greater term
        return rank_[a.pos] < rank_[b.pos] ? 1 : -1;
    }
    return S.mono_cmp(a.mono, b.mono);
}

ModTerm lead_term(const PolyRing& S, const ModuleOrder& ord, const ModuleVector& v) {
    bool have = false;
    ModTerm best{0, Monomial{}};
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) continue;
        ModTerm cand{i, v[i].lead().mono};
        if (!have || ord.cmp(S, cand, best) > 0) {
            best = cand;
            have = true;
        }
    }
    if (!have) throw StructuralError("lead term of zero module vector");
    return best;
}

namespace {

bool single_position(const ModuleVector& v, std::size_t pos) {
    for (std::size_t i = 0; i < v.rank(); ++i)
        if (i != pos && !v[i].is_zero()) return false;
    return true;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != 0 && b.exps[i] != 0) return false;
    return true;
}

class GBKernel {
public:
    GBKernel(const PolyRing& S, const FreeModule& fm, const ModuleOrder& ord)
        : S_(S), fm_(fm), ord_(ord) {}

    void seed(ModuleVector v) {
        if (v.is_zero()) return;
        add_element(std::move(v));
    }

    void run() {
        while (!queue_.empty()) {
            const PairKey key = *queue_.begin();
            queue_.erase(queue_.begin());
            pending_.erase({key.i, key.j});
            process_pair(key.i, key.j);
            done_.insert({key.i, key.j});
        }
        autoreduce();
    }

    std::vector<ModuleVector> take_basis() { return std::move(basis_); }
    std::vector<ModTerm> take_leads() { return std::move(leads_); }

    ModuleVector normal_form(const ModuleVector& v, std::size_t skip = SIZE_MAX) const {
        std::vector<std::vector<Term>> rest(v.rank());
        ModuleVector work = v;
        while (!work.is_zero()) {
            ModTerm t = lead_term(S_, ord_, work);
            const PrimeFieldElement c = work[t.pos].lead().coeff;
            bool reduced = false;
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                if (k == skip) continue;
                if (leads_[k].pos != t.pos) continue;
                if (!S_.mono_divides(leads_[k].mono, t.mono)) continue;
                const Monomial q = S_.mono_div(t.mono, leads_[k].mono);
                work = mv_sub(S_, work, mv_mono_mul(S_, c, q, basis_[k]));
                reduced = true;
                break;
            }
            if (!reduced) {
                rest[t.pos].push_back(Term{c, t.mono});
                work[t.pos] = S_.sub(work[t.pos], S_.monomial(c, t.mono));
            }
        }
        ModuleVector out(v.rank());
        for (std::size_t i = 0; i < v.rank(); ++i) out[i] = S_.from_terms(std::move(rest[i]));
        return out;
    }

private:
    struct PairKey {
        std::int64_t deg;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };

    void add_element(ModuleVector v) {
        const ModTerm lt = lead_term(S_, ord_, v);
        const PrimeFieldElement lc = v[lt.pos].lead().coeff;
        if (!lc.is_one()) v = mv_scale(S_, lc.inverse(), v);
        const std::size_t idx = basis_.size();
        basis_.push_back(std::move(v));
        leads_.push_back(lt);
        for (std::size_t k = 0; k < idx; ++k) {
            if (leads_[k].pos != lt.pos) continue;
            const Monomial l = S_.mono_lcm(leads_[k].mono, lt.mono);
            const std::int64_t deg = l.degree + fm_.twists[lt.pos];
            queue_.insert(PairKey{deg, k, idx});
            pending_.insert({k, idx});
        }
    }

    void process_pair(std::size_t i, std::size_t j) {
        const ModTerm &li = leads_[i], &lj = leads_[j];
        // product criterion, valid only in the embedded-ideal case
        if (coprime(li.mono, lj.mono) && single_position(basis_[i], li.pos) &&
            single_position(basis_[j], lj.pos))
            return;
        const Monomial l = S_.mono_lcm(li.mono, lj.mono);
        // chain criterion: both companion pairs already handled
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == i || k == j) continue;
            if (leads_[k].pos != li.pos) continue;
            if (!S_.mono_divides(leads_[k].mono, l)) continue;
            auto a = std::minmax(i, k), b = std::minmax(j, k);
            if (done_.count({a.first, a.second}) && done_.count({b.first, b.second})) return;
        }
        const PrimeFieldElement one = S_.coeff(1);
        ModuleVector s = mv_sub(
            S_, mv_mono_mul(S_, one, S_.mono_div(l, li.mono), basis_[i]),
            mv_mono_mul(S_, one, S_.mono_div(l, lj.mono), basis_[j]));
        ModuleVector r = normal_form(s);
        if (!r.is_zero()) add_element(std::move(r));
    }

    void autoreduce() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                ModuleVector r = normal_form(basis_[k], k);
                if (!mv_equal(S_, r, basis_[k])) {
                    changed = true;
                    if (r.is_zero()) {
                        basis_.erase(basis_.begin() + k);
                        leads_.erase(leads_.begin() + k);
                        --k;
                    } else {
                        const ModTerm lt = lead_term(S_, ord_, r);
                        const PrimeFieldElement lc = r[lt.pos].lead().coeff;
                        if (!lc.is_one()) r = mv_scale(S_, lc.inverse(), r);
                        basis_[k] = std::move(r);
                        leads_[k] = lt;
                    }
                }
            }
        }
        std::vector<std::size_t> idx(basis_.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return ord_.cmp(S_, leads_[a], leads_[b]) < 0;
        });
        std::vector<ModuleVector> nb;
        std::vector<ModTerm> nl;
        nb.reserve(idx.size());
        for (auto id : idx) {
            nb.push_back(std::move(basis_[id]));
            nl.push_back(std::move(leads_[id]));
        }
        basis_ = std::move(nb);
        leads_ = std::move(nl);
    }

    const PolyRing& S_;
    FreeModule fm_;
    ModuleOrder ord_;
    std::vector<ModuleVector> basis_;
    std::vector<ModTerm> leads_;
    std::set<PairKey> queue_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
    std::set<std::pair<std::size_t, std::size_t>> done_;
};

void check_homogeneous(const PolyRing& S, const FreeModule& fm,
                       const std::vector<ModuleVector>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        if (gens[i].rank() != fm.rank())
            throw StructuralError("generator " + std::to_string(i) + ": rank mismatch");
        if (!mv_degree(S, fm, gens[i]))
            throw StructuralError("generator " + std::to_string(i) + " is not homogeneous");
    }
}

void augment_with_ideal(const PolyRing& S, const FreeModule& fm,
                        const std::vector<Polynomial>& ideal_gb, GBKernel& kernel) {
    for (std::size_t j = 0; j < fm.rank(); ++j) {
        for (const auto& g : ideal_gb) {
            ModuleVector v(fm.rank());
            v[j] = g;
            (void)S;
            kernel.seed(std::move(v));
        }
    }
}

} // namespace

SubmoduleGB buchberger_with_order(std::vector<ModuleVector> gens, const RingPtr& ring,
                                  const FreeModule& fm, const ModuleOrder& ord,
                                  bool augment_ideal) {
    const PolyRing& S = ring->poly();
    check_homogeneous(S, fm, gens);
    GBKernel kernel(S, fm, ord);
    for (auto& g : gens) kernel.seed(std::move(g));
    if (augment_ideal && ring->is_quotient()) augment_with_ideal(S, fm, ring->ideal_gb(), kernel);
    kernel.run();

    SubmoduleGB gb;
    gb.ring_ = ring;
    gb.fm_ = fm;
    gb.order_ = ord;
    gb.basis_ = kernel.take_basis();
    gb.leads_ = kernel.take_leads();
    gb.reduced_ = true;
    return gb;
}

SubmoduleGB buchberger(std::vector<ModuleVector> gens, const RingPtr& ring,
                       const FreeModule& fm) {
    return buchberger_with_order(std::move(gens), ring, fm, ModuleOrder::pot(fm), true);
}

ModuleVector normal_form(const ModuleVector& v, const SubmoduleGB& gb) {
    const PolyRing& S = gb.ring()->poly();
    if (v.rank() != gb.free_module().rank())
        throw StructuralError("normal form: rank mismatch");
    std::vector<std::vector<Term>> rest(v.rank());
    ModuleVector work = v;
    while (!work.is_zero()) {
        ModTerm t = lead_term(S, gb.order(), work);
        const PrimeFieldElement c = work[t.pos].lead().coeff;
        bool reduced = false;
        for (std::size_t k = 0; k < gb.basis().size(); ++k) {
            if (gb.leads()[k].pos != t.pos) continue;
            if (!S.mono_divides(gb.leads()[k].mono, t.mono)) continue;
            const Monomial q = S.mono_div(t.mono, gb.leads()[k].mono);
            work = mv_sub(S, work, mv_mono_mul(S, c, q, gb.basis()[k]));
            reduced = true;
            break;
        }
        if (!reduced) {
            rest[t.pos].push_back(Term{c, t.mono});
            work[t.pos] = S.sub(work[t.pos], S.monomial(c, t.mono));
        }
    }
    ModuleVector out(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = S.from_terms(std::move(rest[i]));
    return out;
}

bool is_member(const ModuleVector& v, const SubmoduleGB& gb) {
    return normal_form(v, gb).is_zero();
}

std::vector<ModuleVector> syzygy_basis(const std::vector<ModuleVector>& vecs,
                                       const RingPtr& ring, const FreeModule& fm) {
    const PolyRing& S = ring->poly();
    check_homogeneous(S, fm, vecs);
    const std::size_t r = fm.rank(), m = vecs.size();

    FreeModule big;
    big.twists = fm.twists;
    for (const auto& v : vecs) {
        auto d = v.is_zero() ? std::optional<std::int64_t>(0) : mv_degree(S, fm, v);
        big.twists.push_back(*d);
    }
    const ModuleOrder ord = ModuleOrder::elimination(big, r);

    std::vector<ModuleVector> inputs;
    inputs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ModuleVector w(r + m);
        for (std::size_t c = 0; c < r; ++c) w[c] = vecs[i][c];
        w[r + i] = S.one();
        inputs.push_back(std::move(w));
    }

    GBKernel kernel(S, big, ord);
    for (auto& w : inputs) kernel.seed(std::move(w));
    if (ring->is_quotient()) augment_with_ideal(S, big, ring->ideal_gb(), kernel);
    kernel.run();

    std::vector<ModuleVector> result;
    for (auto& b : kernel.take_basis()) {
        bool f_zero = true;
        for (std::size_t c = 0; c < r && f_zero; ++c)
            if (!b[c].is_zero()) f_zero = false;
        if (!f_zero) continue;
        ModuleVector s(m);
        for (std::size_t i = 0; i < m; ++i) s[i] = ring->reduce(b[r + i]);
        if (!s.is_zero()) result.push_back(std::move(s));
    }
    return result;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PolyRing& S) {
    const FreeModule fm = FreeModule::trivial(1);
    GBKernel kernel(S, fm, ModuleOrder::pot(fm));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        if (!S.homogeneous_degree(gens[i]))
            throw StructuralError("ideal generator " + std::to_string(i) + " is not homogeneous");
        ModuleVector v(1);
        v[0] = std::move(gens[i]);
        kernel.seed(std::move(v));
    }
    kernel.run();
    std::vector<Polynomial> gb;
    for (auto& b : kernel.take_basis()) gb.push_back(b[0]);
    return gb;
}

Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                            const PolyRing& S) {
    std::vector<Term> rest;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term t = work.lead();
        bool reduced = false;
        for (const auto& g : gb) {
            if (g.is_zero()) continue;
            if (!S.mono_divides(g.lead().mono, t.mono)) continue;
            const Monomial q = S.mono_div(t.mono, g.lead().mono);
            const PrimeFieldElement c = t.coeff / g.lead().coeff;
            work = S.sub(work, S.mono_mul_poly(c, q, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            rest.push_back(t);
            work = S.sub(work, S.monomial(t.coeff, t.mono));
        }
    }
    return S.from_terms(std::move(rest));
}

} // namespace depthlab
