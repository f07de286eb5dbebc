#include "depthlab/invariants.hpp"

namespace depthlab {

std::int64_t GradedRing::depth() const {
    std::lock_guard<std::mutex> lock(depth_mutex_);
    if (!depth_) {
        const std::int64_t n = static_cast<std::int64_t>(ambient_->nvars());
        const RingPtr amb = GradedRing::make(ambient_, {});
        const PresentedModule self =
            PresentedModule::quotient_by_elements(amb, ideal_gens_);
        Resolution res = minimal_free_resolution(self, n + 1);
        if (!res.complete) throw StructuralError("ambient resolution of R did not terminate");
        depth_ = n - res.length();
    }
    return *depth_;
}

DepthReport depth_module(const PresentedModule& m) {
    DepthReport rep;
    rep.method = DepthMethod::AuslanderBuchsbaumAmbient;
    if (is_zero_module(m)) {
        rep.value = kDepthInfinity;
        return rep;
    }
    const std::int64_t n = static_cast<std::int64_t>(m.ring()->poly().nvars());
    rep.value = n - ambient_pd(m);
    return rep;
}

namespace {

ChainComplex ambient_koszul_on_variables(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->poly().nvars(); ++i)
        vars.push_back(ring->poly().variable(i));
    return koszul(ring, std::move(vars)).complex;
}

DepthReport rhom_path(const ChainComplex& x) {
    // Hom_S(Koszul(all variables), X): the Koszul complex resolves k over
    // the ambient ring, and depth is insensitive to restriction along the
    // surjection S -> R, so the scan below reads off -sup RHom(k, X).
    const ChainComplex kz = ambient_koszul_on_variables(x.ring());
    ChainComplex hom = hom_from_free_complex(kz, x);
    for (std::int64_t i = hom.hi(); i >= hom.lo(); --i) {
        if (!is_zero_module(homology_at(hom, i))) {
            DepthReport rep;
            rep.method = DepthMethod::RhomKoszul;
            rep.value = -i;
            return rep;
        }
    }
    throw StructuralError("RHom(k, X) vanished for a complex with certified homology");
}

} // namespace

DepthReport depth_complex_rhom(const ChainComplex& x) {
    if (x.certified_exact) return DepthReport{kDepthInfinity, DepthMethod::RhomKoszul};
    if (!x.certified_sup) throw HypothesisError("depth of a complex with uncertified sup");
    return rhom_path(x);
}

DepthReport depth_complex(const ChainComplex& x) {
    if (x.certified_exact)
        return DepthReport{kDepthInfinity, DepthMethod::TopHomologyShortcut};
    if (!x.certified_sup) throw HypothesisError("depth of a complex with uncertified sup");
    const std::int64_t s = *x.certified_sup;
    const PresentedModule top = homology_at(x, s);
    if (is_zero_module(top))
        throw StructuralError("certified sup points at vanishing homology");
    const DepthReport dt = depth_module(top);
    if (dt.value <= 1) {
        DepthReport rep;
        rep.method = DepthMethod::TopHomologyShortcut;
        rep.value = dt.value - s;
        return rep;
    }
    return rhom_path(x);
}

TorWindowBound q_bound(const PresentedModule& m, const PresentedModule& n, std::int64_t b) {
    if (b < 1) throw StructuralError("q bound needs b >= 1");
    std::vector<PresentedModule> t = tor(m, n, b);
    TorWindowBound out;
    out.bound = b;
    for (std::int64_t i = b; i >= 1; --i) {
        if (!is_zero_module(t[static_cast<std::size_t>(i)])) {
            out.value = i;
            break;
        }
    }
    return out;
}

TorWindowBound p_bound(const PresentedModule& m, const PresentedModule& n, std::int64_t b) {
    if (b < 1) throw StructuralError("p bound needs b >= 1");
    std::vector<PresentedModule> e = ext(m, n, b);
    TorWindowBound out;
    out.bound = b;
    for (std::int64_t i = b; i >= 1; --i) {
        if (!is_zero_module(e[static_cast<std::size_t>(i)])) {
            out.value = i;
            break;
        }
    }
    return out;
}

ComplexityEstimate complexity_estimate(const BettiTable& betti, std::int64_t w0,
                                       std::int64_t w1) {
    if (w1 - w0 + 1 < 4) throw StructuralError("complexity window too short (need >= 4)");
    if (w0 < 0 || w1 >= static_cast<std::int64_t>(betti.total.size()))
        throw StructuralError("complexity window outside computed Betti range");

    ComplexityEstimate est;
    est.w0 = w0;
    est.w1 = w1;
    std::vector<std::int64_t> b;
    for (std::int64_t i = w0; i <= w1; ++i) b.push_back(betti.total[static_cast<std::size_t>(i)]);

    for (auto v : b) {
        if (v == 0) {
            est.verdict = ComplexityVerdict::PdFinite;
            return est;
        }
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        est.growth_ratios.push_back(static_cast<double>(b[i + 1]) / static_cast<double>(b[i]));

    constexpr double kExpDelta = 0.25;
    bool exponential = true;
    for (auto r : est.growth_ratios)
        if (r < 1.0 + kExpDelta) exponential = false;
    if (exponential) {
        est.verdict = ComplexityVerdict::AtLeastExponential;
        return est;
    }

    bool nonincreasing = true, constant = true;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i + 1] > b[i]) nonincreasing = false;
        if (b[i + 1] != b[i]) constant = false;
    }
    if (nonincreasing && !constant) {
        est.verdict = ComplexityVerdict::BoundedBetti;
        est.fitted_degree = 1;
        return est;
    }

    // smallest d with the (d+1)-th finite differences all <= 0 on the window
    std::vector<std::int64_t> diff = b;
    for (std::int64_t d = 0;; ++d) {
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        bool all_nonpos = true;
        for (auto v : next)
            if (v > 0) all_nonpos = false;
        if (all_nonpos || next.size() <= 1) {
            est.verdict = ComplexityVerdict::PolynomialDegree;
            est.fitted_degree = d + 1;
            return est;
        }
        diff = std::move(next);
    }
}

TorsionVerdict torsion_check(const PresentedModule& t, bool domain_asserted) {
    if (!domain_asserted) return TorsionVerdict::Unsupported;
    return annihilator_is_nonzero(t) ? TorsionVerdict::Torsion : TorsionVerdict::NotTorsion;
}

const char* to_string(DepthMethod m) {
    switch (m) {
    case DepthMethod::AuslanderBuchsbaumAmbient: return "auslander-buchsbaum-over-ambient";
    case DepthMethod::RhomKoszul: return "rhom-koszul";
    case DepthMethod::TopHomologyShortcut: return "top-homology-shortcut";
    }
    return "?";
}

const char* to_string(ComplexityVerdict v) {
    switch (v) {
    case ComplexityVerdict::PdFinite: return "pd-finite";
    case ComplexityVerdict::BoundedBetti: return "bounded-betti";
    case ComplexityVerdict::PolynomialDegree: return "polynomial-degree-r";
    case ComplexityVerdict::AtLeastExponential: return "at-least-exponential";
    }
    return "?";
}

const char* to_string(TorsionVerdict v) {
    switch (v) {
    case TorsionVerdict::Torsion: return "torsion";
    case TorsionVerdict::NotTorsion: return "not-torsion";
    case TorsionVerdict::Unsupported: return "unsupported";
    }
    return "?";
}

} // namespace depthlab
