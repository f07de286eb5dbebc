#include "depthlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace depthlab {

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw StructuralError("lead term of zero polynomial");
    return terms_.front();
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> var_names,
                   std::vector<std::int64_t> weights, OrderKind order)
    : p_(p), var_names_(std::move(var_names)), weights_(std::move(weights)), order_(order) {
    if (!is_prime(p_) || p_ < 3)
        throw StructuralError("coefficient modulus must be an odd prime");
    if (var_names_.empty()) throw StructuralError("ring needs at least one variable");
    if (weights_.size() != var_names_.size())
        throw StructuralError("weight count does not match variable count");
    for (auto w : weights_)
        if (w <= 0) throw StructuralError("variable weights must be positive");
}

bool PolyRing::same_ring(const PolyRing& other) const {
    return p_ == other.p_ && var_names_ == other.var_names_ && weights_ == other.weights_ &&
           order_ == other.order_;
}

void PolyRing::check_mono(const Monomial& m) const {
    if (m.exps.size() != nvars()) throw StructuralError("monomial arity mismatch");
}

Monomial PolyRing::mono_one() const {
    Monomial m;
    m.exps.assign(nvars(), 0);
    m.degree = 0;
    return m;
}

Monomial PolyRing::mono_make(std::vector<std::uint32_t> exps) const {
    Monomial m;
    m.exps = std::move(exps);
    check_mono(m);
    m.degree = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        m.degree += static_cast<std::int64_t>(m.exps[i]) * weights_[i];
    return m;
}

Monomial PolyRing::mono_var(std::size_t i, std::uint32_t e) const {
    std::vector<std::uint32_t> exps(nvars(), 0);
    exps.at(i) = e;
    return mono_make(std::move(exps));
}

Monomial PolyRing::mono_mul(const Monomial& a, const Monomial& b) const {
    check_mono(a);
    check_mono(b);
    Monomial m;
    m.exps.resize(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
    m.degree = a.degree + b.degree;
    return m;
}

bool PolyRing::mono_divides(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial PolyRing::mono_div(const Monomial& b, const Monomial& a) const {
    Monomial m;
    m.exps.resize(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (a.exps[i] > b.exps[i]) throw StructuralError("monomial division not exact");
        m.exps[i] = b.exps[i] - a.exps[i];
    }
    m.degree = b.degree - a.degree;
    return m;
}

Monomial PolyRing::mono_lcm(const Monomial& a, const Monomial& b) const {
    Monomial m;
    m.exps.resize(nvars());
    m.degree = 0;
    for (std::size_t i = 0; i < nvars(); ++i) {
        m.exps[i] = std::max(a.exps[i], b.exps[i]);
        m.degree += static_cast<std::int64_t>(m.exps[i]) * weights_[i];
    }
    return m;
}

int PolyRing::mono_cmp(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    if (order_ == OrderKind::WeightedGrevlex) {
        // ties: last variable with differing exponent; smaller exponent wins
        for (std::size_t i = nvars(); i-- > 0;) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
        }
    } else {
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
        }
    }
    return 0;
}

Polynomial PolyRing::constant(std::int64_t c) const {
    PrimeFieldElement e(c, p_);
    if (e.is_zero()) return Polynomial();
    Polynomial f;
    f.terms_.push_back(Term{e, mono_one()});
    return f;
}

Polynomial PolyRing::variable(std::size_t i) const {
    Polynomial f;
    f.terms_.push_back(Term{coeff(1), mono_var(i)});
    return f;
}

Polynomial PolyRing::monomial(PrimeFieldElement c, Monomial m) const {
    check_mono(m);
    if (c.modulus() != p_) throw StructuralError("coefficient modulus mismatch");
    if (c.is_zero()) return Polynomial();
    Polynomial f;
    f.terms_.push_back(Term{c, std::move(m)});
    return f;
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) > 0; });
    Polynomial f;
    for (auto& t : terms) {
        if (t.coeff.modulus() != p_) throw StructuralError("coefficient modulus mismatch");
        check_mono(t.mono);
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            f.terms_.back().coeff = f.terms_.back().coeff + t.coeff;
            if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
    validate(f);
    validate(g);
    Polynomial out;
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        int c = mono_cmp(f.terms_[i].mono, g.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(f.terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(g.terms_[j++]);
        } else {
            PrimeFieldElement s = f.terms_[i].coeff + g.terms_[j].coeff;
            if (!s.is_zero()) out.terms_.push_back(Term{s, f.terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) out.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
    return out;
}

Polynomial PolyRing::neg(const Polynomial& f) const {
    Polynomial out = f;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
    return add(f, neg(g));
}

Polynomial PolyRing::scale(PrimeFieldElement c, const Polynomial& f) const {
    if (c.modulus() != p_) throw StructuralError("coefficient modulus mismatch");
    if (c.is_zero()) return Polynomial();
    Polynomial out = f;
    for (auto& t : out.terms_) t.coeff = t.coeff * c;
    return out;
}

Polynomial PolyRing::mono_mul_poly(PrimeFieldElement c, const Monomial& m,
                                   const Polynomial& f) const {
    if (c.is_zero()) return Polynomial();
    Polynomial out;
    out.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_)
        out.terms_.push_back(Term{t.coeff * c, mono_mul(t.mono, m)});
    return out;
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
    validate(f);
    validate(g);
    Polynomial acc;
    for (const auto& t : f.terms_) acc = add(acc, mono_mul_poly(t.coeff, t.mono, g));
    return acc;
}

bool PolyRing::equal(const Polynomial& f, const Polynomial& g) const {
    if (f.terms().size() != g.terms().size()) return false;
    for (std::size_t i = 0; i < f.terms().size(); ++i)
        if (f.terms()[i].coeff != g.terms()[i].coeff || f.terms()[i].mono != g.terms()[i].mono)
            return false;
    return true;
}

std::optional<std::int64_t> PolyRing::homogeneous_degree(const Polynomial& f) const {
    if (f.is_zero()) throw StructuralError("degree of the zero polynomial is undefined");
    std::int64_t d = f.terms().front().mono.degree;
    for (const auto& t : f.terms())
        if (t.mono.degree != d) return std::nullopt;
    return d;
}

void PolyRing::validate(const Polynomial& f) const {
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        if (t.coeff.modulus() != p_) throw StructuralError("coefficient modulus mismatch");
        if (t.coeff.is_zero()) throw StructuralError("zero coefficient in canonical form");
        check_mono(t.mono);
        std::int64_t d = 0;
        for (std::size_t k = 0; k < nvars(); ++k)
            d += static_cast<std::int64_t>(t.mono.exps[k]) * weights_[k];
        if (d != t.mono.degree) throw StructuralError("stale cached monomial degree");
        if (i > 0 && mono_cmp(f.terms()[i - 1].mono, t.mono) <= 0)
            throw StructuralError("terms not strictly descending");
    }
}

std::string PolyRing::format(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) os << "*";
        os << var_names_[i];
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string PolyRing::format(const Polynomial& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.mono.is_one()) {
            os << t.coeff.value();
        } else if (t.coeff.is_one()) {
            os << format(t.mono);
        } else {
            os << t.coeff.value() << "*" << format(t.mono);
        }
    }
    return os.str();
}

} // namespace depthlab
