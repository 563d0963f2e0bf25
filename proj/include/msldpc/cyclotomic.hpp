#ifndef MSLDPC_CYCLOTOMIC_HPP
#define MSLDPC_CYCLOTOMIC_HPP

// Cyclotomic cosets modulo n and the factorization of z^n+1 into
// irreducible binary polynomials, ordered by ascending degree (ties broken
// by coset leader) as the subset search requires.

#include <cstdint>
#include <vector>

#include "binary_poly.hpp"
#include "errors.hpp"
#include "gf2m.hpp"

namespace msldpc {

struct CyclotomicCoset {
    uint32_t leader = 0;             // smallest member
    std::vector<uint32_t> members;   // sorted ascending

    size_t size() const { return members.size(); }
};

// Partition of {0,...,n-1} into doubling-closed classes, sorted by
// (size, leader).
inline std::vector<CyclotomicCoset> cosets(uint32_t n) {
    if (n % 2 == 0) throw EvenLength();
    std::vector<uint8_t> seen(n, 0);
    std::vector<CyclotomicCoset> out;
    for (uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        CyclotomicCoset c;
        uint32_t e = s;
        do {
            seen[e] = 1;
            c.members.push_back(e);
            e = (2 * e) % n;
        } while (e != s);
        std::sort(c.members.begin(), c.members.end());
        c.leader = c.members.front();
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CyclotomicCoset& a, const CyclotomicCoset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.leader < b.leader;
    });
    return out;
}

// prod_{j in c} (z - alpha^j), computed in the splitting field; the result
// must land in GF(2)[z] or the field context is broken.
inline BinaryPoly minimal_polynomial(const CyclotomicCoset& c, const FieldContext& ctx) {
    std::vector<FieldElement> coeff{ctx.one()};
    for (uint32_t j : c.members) {
        FieldElement root = ctx.alpha_pow(j);
        // multiply by (z + root)
        std::vector<FieldElement> next(coeff.size() + 1, ctx.zero());
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] = next[i + 1] + coeff[i];
            next[i] = next[i] + ctx.mul(root, coeff[i]);
        }
        coeff = std::move(next);
    }
    std::vector<uint32_t> sup;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].is_one())
            sup.push_back(static_cast<uint32_t>(i));
        else if (!coeff[i].is_zero())
            throw NonBinaryCoefficient();
    }
    return BinaryPoly::from_support(std::move(sup));
}

struct FactorEntry {
    CyclotomicCoset coset;
    BinaryPoly f;       // irreducible factor, degree = coset size
    BinaryPoly theta;   // associated primitive idempotent; filled in by
                        // attach_primitive_idempotents before any search
};

struct FactorSet {
    uint32_t n = 0;
    std::vector<FactorEntry> entries;

    size_t count() const { return entries.size(); }

    bool idempotents_attached() const {
        for (const auto& e : entries)
            if (e.theta.is_zero()) return false;
        return !entries.empty();
    }
};

// z^n+1 = f_1 f_2 ... f_t with the product identity checked before return.
inline FactorSet factorize(const FieldContext& ctx) {
    FactorSet fs;
    fs.n = ctx.n();
    uint32_t degree_sum = 0;
    for (const auto& c : cosets(ctx.n())) {
        FactorEntry e;
        e.f = minimal_polynomial(c, ctx);
        degree_sum += static_cast<uint32_t>(e.f.degree());
        e.coset = c;
        fs.entries.push_back(std::move(e));
    }
    BinaryPoly prod = BinaryPoly::one();
    for (const auto& e : fs.entries) prod = poly_mul(prod, e.f);
    if (degree_sum != ctx.n() || prod != BinaryPoly::xn_plus_one(ctx.n()))
        throw NonBinaryCoefficient("factor product does not reproduce z^n+1");
    return fs;
}

}  // namespace msldpc

#endif
