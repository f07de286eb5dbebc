#ifndef DEPTHLAB_FIELD_HPP
#define DEPTHLAB_FIELD_HPP

#include <cstdint>

#include "depthlab/errors.hpp"

namespace depthlab {

bool is_prime(std::uint32_t n);

// One residue of F_p. The modulus travels with the value so that mixing
// sessions with different p fails loudly instead of corrupting data.
class PrimeFieldElement {
public:
    PrimeFieldElement() : value_(0), p_(0) {}

    PrimeFieldElement(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    PrimeFieldElement operator+(PrimeFieldElement rhs) const;
    PrimeFieldElement operator-(PrimeFieldElement rhs) const;
    PrimeFieldElement operator*(PrimeFieldElement rhs) const;
    PrimeFieldElement operator-() const;
    PrimeFieldElement inverse() const;
    PrimeFieldElement operator/(PrimeFieldElement rhs) const { return *this * rhs.inverse(); }

    bool operator==(const PrimeFieldElement& rhs) const {
        return value_ == rhs.value_ && p_ == rhs.p_;
    }
    bool operator!=(const PrimeFieldElement& rhs) const { return !(*this == rhs); }

private:
    void check_same(const PrimeFieldElement& rhs) const {
        if (p_ != rhs.p_) throw StructuralError("prime field modulus mismatch");
    }

    std::uint32_t value_;
    std::uint32_t p_;
};

// Raw mod-p ops on uint32 words. Used by the dense linear-algebra kernels
// where a per-element modulus would be wasted space.
struct FpOps {
    std::uint32_t p;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const;
};

} // namespace depthlab

#endif
