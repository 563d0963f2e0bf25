#ifndef MSLDPC_MATTSON_SOLOMON_HPP
#define MSLDPC_MATTSON_SOLOMON_HPP

// The spectral side of the construction: primitive idempotents theta_i,
// the Mattson-Solomon transform restricted to binary idempotents, its
// inverse, and the spectral laws that read weight and dimension off the
// z-domain without materializing u(x).
//
// The transform of a(x) places a(alpha^j) at z^(n-j). For a binary
// idempotent every evaluation is 0 or 1, so the image is again a binary
// polynomial (and again an idempotent); general binary inputs would
// produce field-valued spectra and are rejected rather than silently
// embedded.

#include <cstdint>
#include <vector>

#include "binary_poly.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "gf2m.hpp"

namespace msldpc {

// An (x-domain, z-domain) idempotent pair u = MS^-1(theta).
struct SpectralPair {
    BinaryPoly u;
    BinaryPoly theta;
    uint32_t n = 0;
};

// The unique theta with theta = 1 mod f and theta = 0 mod (z^n+1)/f,
// computed by CRT: theta = k * (k^-1 mod f) mod (z^n+1).
inline BinaryPoly primitive_idempotent(const BinaryPoly& f, const FactorSet& fs, const FieldContext& ctx) {
    bool found = false;
    for (const auto& e : fs.entries)
        if (e.f == f) {
            found = true;
            break;
        }
    if (!found) throw NotAFactor();

    const uint32_t n = ctx.n();
    BinaryPoly k = poly_divide_exact(BinaryPoly::xn_plus_one(n), f);

    // extended Euclid for k^-1 mod f (gcd(k, f) = 1 since z^n+1 is
    // squarefree for odd n)
    detail::DensePoly r0 = detail::DensePoly::from(f);
    detail::DensePoly r1 = detail::DensePoly::from(poly_mod(k, f));
    detail::DensePoly s0, s1;  // s0 = 0, s1 = 1
    s1.flip(0);
    while (!r1.is_zero()) {
        detail::DensePoly q, r2;
        detail::dense_divmod(r0, r1, q, r2);
        detail::DensePoly s2 = s0;
        s2.xor_shifted(detail::dense_mul(q, s1), 0);
        // trim to keep the invariant deg(s) < deg(f)
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    BinaryPoly kinv = poly_mod(s0.to_sparse(), f);
    BinaryPoly theta = poly_mul_mod(poly_mod(k, BinaryPoly::xn_plus_one(n)), kinv, n);

    // hard postconditions: congruences and idempotency
    if (!is_idempotent(theta, n) || !poly_mod(theta + BinaryPoly::one(), f).is_zero() ||
        !poly_mod(theta, k).is_zero())
        throw NotAFactor("primitive idempotent postcondition failed");
    return theta;
}

// Fills theta for every factor; call once after factorize, before search.
inline void attach_primitive_idempotents(FactorSet& fs, const FieldContext& ctx) {
    for (auto& e : fs.entries) e.theta = primitive_idempotent(e.f, fs, ctx);
}

// Phi(u): coefficient of z^(n-j) is u(alpha^j), j = 1..n.
inline BinaryPoly ms_transform(const BinaryPoly& u, const FieldContext& ctx) {
    const uint32_t n = ctx.n();
    if (!u.reduced_mod(n)) throw LengthMismatch();
    if (!is_idempotent(u, n)) throw NotIdempotent();
    std::vector<uint32_t> sup;
    for (uint32_t j = 1; j <= n; ++j) {
        FieldElement v = ctx.eval_at_alpha_pow(u, j);
        if (v.is_one())
            sup.push_back(n - j);  // j = n lands on z^0
        else if (!v.is_zero())
            throw NotIdempotent("non-binary spectrum");
    }
    return BinaryPoly::from_support(std::move(sup));
}

// MS^-1(theta): u_i = theta(alpha^i) (1/n = 1 in GF(2) for odd n).
inline BinaryPoly ms_inverse(const BinaryPoly& theta, const FieldContext& ctx) {
    const uint32_t n = ctx.n();
    if (!theta.reduced_mod(n)) throw LengthMismatch();
    if (!is_idempotent(theta, n)) throw NotIdempotent();
    std::vector<uint32_t> sup;
    for (uint32_t i = 0; i < n; ++i) {
        FieldElement v = ctx.eval_at_alpha_pow(theta, i);
        if (v.is_one())
            sup.push_back(i);
        else if (!v.is_zero())
            throw NotIdempotent("non-binary inverse image");
    }
    return BinaryPoly::from_support(std::move(sup));
}

struct SpectralWeights {
    uint32_t weight_u = 0;          // wt(u) = sum of factor degrees over the subset
    uint32_t num_unity_roots = 0;   // roots of unity killed by u = n - wt(theta) = k
};

// The two z-domain laws for u = sum of the subset's idempotents.
// Indices are positions into fs.entries.
inline SpectralWeights spectral_weight_law(const std::vector<size_t>& subset, const FactorSet& fs) {
    if (subset.empty()) throw EmptySubset();
    BinaryPoly theta;
    uint32_t degsum = 0;
    for (size_t i : subset) {
        degsum += static_cast<uint32_t>(fs.entries.at(i).f.degree());
        theta += fs.entries.at(i).theta;
    }
    return {degsum, fs.n - static_cast<uint32_t>(theta.weight())};
}

}  // namespace msldpc

#endif
