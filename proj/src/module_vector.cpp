#include "depthlab/module_vector.hpp"

namespace depthlab {

namespace {
void check_rank(const ModuleVector& a, const ModuleVector& b) {
    if (a.rank() != b.rank()) throw StructuralError("module vector rank mismatch");
}
} // namespace

ModuleVector mv_add(const PolyRing& S, const ModuleVector& a, const ModuleVector& b) {
    check_rank(a, b);
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.add(a[i], b[i]);
    return out;
}

ModuleVector mv_sub(const PolyRing& S, const ModuleVector& a, const ModuleVector& b) {
    check_rank(a, b);
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.sub(a[i], b[i]);
    return out;
}

ModuleVector mv_neg(const PolyRing& S, const ModuleVector& a) {
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.neg(a[i]);
    return out;
}

ModuleVector mv_scale(const PolyRing& S, PrimeFieldElement c, const ModuleVector& a) {
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.scale(c, a[i]);
    return out;
}

ModuleVector mv_mono_mul(const PolyRing& S, PrimeFieldElement c, const Monomial& m,
                         const ModuleVector& a) {
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.mono_mul_poly(c, m, a[i]);
    return out;
}

ModuleVector mv_poly_mul(const PolyRing& S, const Polynomial& f, const ModuleVector& a) {
    ModuleVector out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] = S.mul(f, a[i]);
    return out;
}

bool mv_equal(const PolyRing& S, const ModuleVector& a, const ModuleVector& b) {
    if (a.rank() != b.rank()) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!S.equal(a[i], b[i])) return false;
    return true;
}

std::optional<std::int64_t> mv_degree(const PolyRing& S, const FreeModule& fm,
                                      const ModuleVector& v) {
    if (v.rank() != fm.rank()) throw StructuralError("vector rank does not match free module");
    std::optional<std::int64_t> deg;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) continue;
        auto d = S.homogeneous_degree(v[i]);
        if (!d) return std::nullopt;
        std::int64_t total = *d + fm.twists[i];
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg;
}

} // namespace depthlab
