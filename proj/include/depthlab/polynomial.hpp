#ifndef DEPTHLAB_POLYNOMIAL_HPP
#define DEPTHLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/field.hpp"
#include "depthlab/monomial.hpp"

namespace depthlab {

struct Term {
    PrimeFieldElement coeff;
    Monomial mono;
};

// Sparse polynomial: terms strictly descending in the session monomial
// order, no zero coefficients. Constructed only through PolyRing, which
// enforces the canonical form.
class Polynomial {
public:
    Polynomial() = default;

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const;

private:
    friend class PolyRing;
    std::vector<Term> terms_;
};

// Ambient weighted polynomial ring S = F_p[x_1..x_n] with a fixed monomial
// order. All polynomial arithmetic routes through here so the modulus,
// weights, and order stay consistent for a session.
class PolyRing {
public:
    PolyRing(std::uint32_t p, std::vector<std::string> var_names,
             std::vector<std::int64_t> weights, OrderKind order);

    std::uint32_t modulus() const { return p_; }
    std::size_t nvars() const { return var_names_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    OrderKind order() const { return order_; }

    bool same_ring(const PolyRing& other) const;

    // monomials
    Monomial mono_one() const;
    Monomial mono_make(std::vector<std::uint32_t> exps) const;
    Monomial mono_var(std::size_t i, std::uint32_t e = 1) const;
    Monomial mono_mul(const Monomial& a, const Monomial& b) const;
    bool mono_divides(const Monomial& a, const Monomial& b) const; // a | b
    Monomial mono_div(const Monomial& b, const Monomial& a) const; // b / a
    Monomial mono_lcm(const Monomial& a, const Monomial& b) const;
    // total order: negative if a < b, 0 if equal, positive if a > b
    int mono_cmp(const Monomial& a, const Monomial& b) const;

    // polynomials
    Polynomial zero() const { return Polynomial(); }
    Polynomial constant(std::int64_t c) const;
    Polynomial one() const { return constant(1); }
    Polynomial variable(std::size_t i) const;
    Polynomial monomial(PrimeFieldElement c, Monomial m) const;
    Polynomial from_terms(std::vector<Term> terms) const; // sorts and combines

    Polynomial add(const Polynomial& f, const Polynomial& g) const;
    Polynomial sub(const Polynomial& f, const Polynomial& g) const;
    Polynomial neg(const Polynomial& f) const;
    Polynomial mul(const Polynomial& f, const Polynomial& g) const;
    Polynomial scale(PrimeFieldElement c, const Polynomial& f) const;
    // c * m * f in one pass
    Polynomial mono_mul_poly(PrimeFieldElement c, const Monomial& m, const Polynomial& f) const;

    bool equal(const Polynomial& f, const Polynomial& g) const;

    // Weighted degree shared by all terms, or nullopt when mixed.
    // Degree of the zero polynomial is undefined and rejected.
    std::optional<std::int64_t> homogeneous_degree(const Polynomial& f) const;

    PrimeFieldElement coeff(std::int64_t c) const { return PrimeFieldElement(c, p_); }

    std::string format(const Polynomial& f) const;
    std::string format(const Monomial& m) const;

    void validate(const Polynomial& f) const;

private:
    void check_mono(const Monomial& m) const;

    std::uint32_t p_;
    std::vector<std::string> var_names_;
    std::vector<std::int64_t> weights_;
    OrderKind order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

} // namespace depthlab

#endif
