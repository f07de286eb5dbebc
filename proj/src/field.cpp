#include "depthlab/field.hpp"

namespace depthlab {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw StructuralError("modulus " + std::to_string(p) + " is not prime");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElement PrimeFieldElement::operator+(PrimeFieldElement rhs) const {
    check_same(rhs);
    PrimeFieldElement out = *this;
    out.value_ = FpOps{p_}.add(value_, rhs.value_);
    return out;
}

PrimeFieldElement PrimeFieldElement::operator-(PrimeFieldElement rhs) const {
    check_same(rhs);
    PrimeFieldElement out = *this;
    out.value_ = FpOps{p_}.sub(value_, rhs.value_);
    return out;
}

PrimeFieldElement PrimeFieldElement::operator*(PrimeFieldElement rhs) const {
    check_same(rhs);
    PrimeFieldElement out = *this;
    out.value_ = FpOps{p_}.mul(value_, rhs.value_);
    return out;
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    PrimeFieldElement out = *this;
    out.value_ = FpOps{p_}.neg(value_);
    return out;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    PrimeFieldElement out = *this;
    out.value_ = FpOps{p_}.inv(value_);
    return out;
}

std::uint32_t FpOps::inv(std::uint32_t a) const {
    if (a == 0) throw StructuralError("inverse of zero in F_p");
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace depthlab
