#ifndef MSLDPC_GF2M_HPP
#define MSLDPC_GF2M_HPP

// The splitting field GF(2^m) of z^n-1 over GF(2), for odd n, with a fixed
// primitive n-th root of unity alpha.
//
// Everything is pinned so that identical n always produces the identical
// context: the modulus is the lowest irreducible polynomial of degree m in
// integer encoding (bit i = coefficient of z^i), alpha is gamma^((2^m-1)/n)
// for gamma the lowest-encoded primitive element. Multiplication runs on
// log/antilog tables; m is capped (default 24) and construction refuses
// larger fields rather than switching algorithms.

#include <cstdint>
#include <memory>
#include <vector>

#include "binary_poly.hpp"
#include "errors.hpp"

namespace msldpc {

// Element of GF(2^m), encoded as a binary polynomial of degree < m in the
// modulus basis (bit i = coefficient of z^i). Addition is XOR; everything
// multiplicative goes through the owning FieldContext.
struct FieldElement {
    uint32_t bits = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.bits == b.bits; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.bits != b.bits; }
    FieldElement operator+(FieldElement o) const { return {bits ^ o.bits}; }
    bool is_zero() const { return bits == 0; }
    bool is_one() const { return bits == 1; }
};

namespace detail {

// Carry-less product of two small binary polynomials (integer encoded).
inline uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline int bit_degree(uint64_t v) { return v ? 63 - __builtin_clzll(v) : -1; }

// Reduction modulo the integer-encoded polynomial f.
inline uint64_t clmod(uint64_t a, uint64_t f) {
    int df = bit_degree(f);
    for (int d = bit_degree(a); d >= df; --d)
        if ((a >> d) & 1) a ^= f << (d - df);
    return a;
}

inline uint64_t clgcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t r = clmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// x^(2^k) mod f by repeated squaring of the residue.
inline uint64_t x_pow_pow2_mod(unsigned k, uint64_t f) {
    uint64_t r = clmod(2, f);  // the polynomial x
    for (unsigned i = 0; i < k; ++i) r = clmod(clmul(r, r), f);
    return r;
}

// Rabin test, exact for the tiny degrees used here.
inline bool is_irreducible(uint64_t f) {
    int m = bit_degree(f);
    if (m < 1) return false;
    if ((f & 1) == 0) return m == 1;  // divisible by x
    if (x_pow_pow2_mod(static_cast<unsigned>(m), f) != 2u) return false;
    int rem = m;
    for (int p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        while (rem % p == 0) rem /= p;
        uint64_t t = x_pow_pow2_mod(static_cast<unsigned>(m / p), f) ^ 2u;
        if (clgcd(f, t) != 1) return false;
    }
    if (rem > 1 && rem != m) {
        uint64_t t = x_pow_pow2_mod(static_cast<unsigned>(m / rem), f) ^ 2u;
        if (clgcd(f, t) != 1) return false;
    }
    return true;
}

inline std::vector<uint32_t> prime_factors(uint64_t v) {
    std::vector<uint32_t> ps;
    for (uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        ps.push_back(static_cast<uint32_t>(p));
        while (v % p == 0) v /= p;
    }
    if (v > 1) ps.push_back(static_cast<uint32_t>(v));
    return ps;
}

}  // namespace detail

class FieldContext {
   public:
    // Builds GF(2^m) for the minimal m with 2^m = 1 mod n.
    static FieldContext build(uint32_t n, uint32_t max_m = 24) {
        if (n % 2 == 0) throw EvenLength();
        if (n < 3) throw LengthTooSmall();

        uint32_t m = 0;
        uint64_t r = 1;
        do {
            r = (2 * r) % n;
            ++m;
            if (m > max_m) throw FieldTooLarge();
        } while (r != 1);

        FieldContext ctx;
        ctx.n_ = n;
        ctx.m_ = m;
        ctx.q_ = uint64_t(1) << m;

        // lowest-encoded irreducible of degree m; constant term must be 1
        for (uint64_t c = ctx.q_ | 1;; c += 2) {
            if (detail::is_irreducible(c)) {
                ctx.modulus_ = c;
                break;
            }
        }

        ctx.build_tables();
        return ctx;
    }

    uint32_t n() const { return n_; }
    uint32_t m() const { return m_; }
    uint64_t order() const { return q_ - 1; }  // size of the multiplicative group
    uint64_t modulus() const { return modulus_; }
    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const { return alpha_; }
    FieldElement generator() const { return {antilog_[1]}; }

    FieldElement add(FieldElement a, FieldElement b) const { return a + b; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.is_zero() || b.is_zero()) return {0};
        uint64_t s = uint64_t(log_[a.bits]) + log_[b.bits];
        if (s >= order()) s -= order();
        return {antilog_[s]};
    }

    FieldElement inv(FieldElement a) const {
        if (a.is_zero()) throw DivisionByZero("inverse of the zero field element");
        uint64_t l = log_[a.bits];
        return {antilog_[l == 0 ? 0 : order() - l]};
    }

    // a^e with the exponent reduced mod 2^m-1 for nonzero a.
    FieldElement pow(FieldElement a, int64_t e) const {
        if (a.is_zero()) {
            if (e > 0) return {0};
            if (e == 0) return {1};
            throw DivisionByZero("negative power of the zero field element");
        }
        int64_t ord = static_cast<int64_t>(order());
        int64_t re = e % ord;
        if (re < 0) re += ord;
        uint64_t l = (static_cast<uint64_t>(log_[a.bits]) * static_cast<uint64_t>(re)) % order();
        return {antilog_[l]};
    }

    // alpha^i, exponent taken mod n.
    FieldElement alpha_pow(int64_t i) const {
        int64_t ri = i % n_;
        if (ri < 0) ri += n_;
        uint64_t l = (alpha_log_ * static_cast<uint64_t>(ri)) % order();
        return {antilog_[l]};
    }

    // Evaluates a binary polynomial at a field element (sum of e^exp over
    // the support).
    FieldElement eval_poly(const BinaryPoly& p, FieldElement e) const {
        if (e.is_zero()) return p.has_term(0) ? one() : zero();
        uint64_t le = log_[e.bits];
        uint32_t acc = 0;
        for (uint32_t exp : p.support()) acc ^= antilog_[(le * exp) % order()];
        return {acc};
    }

    // Evaluation at alpha^i; the workhorse of the spectral maps.
    FieldElement eval_at_alpha_pow(const BinaryPoly& p, int64_t i) const {
        return eval_poly(p, alpha_pow(i));
    }

   private:
    void build_tables() {
        antilog_.assign(q_ - 1, 0);
        log_.assign(q_, 0);

        // find the lowest-encoded primitive element gamma
        auto factors = detail::prime_factors(order());
        uint64_t gamma = 0;
        for (uint64_t g = 2; g < q_; ++g) {
            bool primitive = true;
            for (uint32_t p : factors) {
                if (elem_pow_direct(g, order() / p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gamma = g;
                break;
            }
        }

        uint64_t v = 1;
        for (uint64_t i = 0; i < order(); ++i) {
            antilog_[i] = static_cast<uint32_t>(v);
            log_[v] = static_cast<uint32_t>(i);
            v = detail::clmod(detail::clmul(v, gamma), modulus_);
        }

        alpha_log_ = order() / n_;
        alpha_ = {antilog_[alpha_log_]};
    }

    // Table-free exponentiation used while bootstrapping the tables.
    uint64_t elem_pow_direct(uint64_t base, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = detail::clmod(detail::clmul(r, base), modulus_);
            base = detail::clmod(detail::clmul(base, base), modulus_);
            e >>= 1;
        }
        return r;
    }

    uint32_t n_ = 0;
    uint32_t m_ = 0;
    uint64_t q_ = 0;
    uint64_t modulus_ = 0;
    uint64_t alpha_log_ = 0;
    FieldElement alpha_{0};
    std::vector<uint32_t> antilog_;  // index -> element
    std::vector<uint32_t> log_;      // element -> index (log_[0] unused)
};

}  // namespace msldpc

#endif
