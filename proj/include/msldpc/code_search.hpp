#ifndef MSLDPC_CODE_SEARCH_HPP
#define MSLDPC_CODE_SEARCH_HPP

// Bounded exhaustive subset search over the factors of z^n+1, run entirely
// in the spectral domain. A branch extends while the accumulated factor
// degree stays within the weight bound; a subset becomes a candidate when
// the spectrum is heavy enough for the rate target and its cyclic run
// clears the distance target; only then is u(x) materialized, checked for
// degeneracy, and recorded. Output is deduplicated by generator and sorted,
// so identical configurations always produce byte-identical listings.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binary_poly.hpp"
#include "cyclic_code.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "gf2m.hpp"
#include "mattson_solomon.hpp"

namespace msldpc {

struct SearchConfig {
    uint32_t n = 0;
    double r_min = 0.0;   // minimum code rate of interest, in [0,1)
    uint32_t d = 1;       // lowest expected minimum distance
    uint32_t delta = 0;   // slack on the weight bound
    std::optional<uint64_t> max_results;
    std::optional<uint64_t> budget;  // node-count limit
};

struct CodeRecord {
    uint32_t n = 0;
    uint32_t k = 0;
    std::vector<size_t> subset;  // 1-based factor indices, ascending
    BinaryPoly u;
    BinaryPoly theta;
    BinaryPoly g;
    uint32_t weight = 0;     // wt(u) = sum of factor degrees over subset
    uint32_t r_theta = 0;    // longest cyclic run of nonzero theta coefficients
    uint32_t bch_bound = 0;  // r_theta + 1
    bool orthogonal = false;
    std::string dedup_key;   // canonical generator, qualified by n
};

struct SearchResult {
    std::vector<CodeRecord> records;
    uint64_t nodes = 0;
    bool truncated = false;  // budget or result cap hit; records are partial
};

// Weight bound of the search: sum of factor degrees <= ceil(sqrt(n)) + delta.
inline uint32_t weight_bound(uint32_t n, uint32_t delta) {
    uint32_t r = static_cast<uint32_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;       // ceil, robust against fp rounding
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return r + delta;
}

// Rate bound: wt(theta) <= (1 - r_min) * n, inclusive at ties.
inline bool rate_bound_ok(size_t theta_weight, uint32_t n, double r_min) {
    return static_cast<double>(theta_weight) <= (1.0 - r_min) * n + 1e-9;
}

// Distance bound: the run r_theta must reach d, i.e. the BCH bound
// r_theta + 1 must exceed the lowest expected minimum distance.
inline bool run_bound_ok(uint32_t r_theta, uint32_t d) { return r_theta >= d; }

// True iff the cyclic code defined by u has full effective length. With
// h = gcd(x^n+1, u) and g = (x^n+1)/h, both degenerate shapes are rejected
// for every proper divisor n' of n:
//   - h | x^n'+1: every codeword is a repetition of an n'-periodic word;
//   - g | x^n'+1: the check structure lives on period n', so the code is
//     an interleaving of shorter codes.
// k = 0 and k = n are rejected as well.
inline bool is_nondegenerate(const BinaryPoly& u, uint32_t n) {
    if (u.is_zero()) throw ZeroPolynomial("degeneracy test needs a nonzero polynomial");
    if (!u.reduced_mod(n)) throw LengthMismatch();
    BinaryPoly h = poly_gcd(BinaryPoly::xn_plus_one(n), u);
    uint32_t k = static_cast<uint32_t>(h.degree());
    if (k == 0 || k == n) return false;
    BinaryPoly g = poly_divide_exact(BinaryPoly::xn_plus_one(n), h);
    for (uint32_t np = 1; np < n; ++np) {
        if (n % np != 0) continue;
        BinaryPoly cycle = BinaryPoly::xn_plus_one(np);
        if (poly_mod(cycle, h).is_zero()) return false;
        if (poly_mod(cycle, g).is_zero()) return false;
    }
    return true;
}

// Inserts iff no existing record carries the same generator; returns
// whether the record was inserted.
inline bool dedup_insert(const CodeRecord& rec, std::vector<CodeRecord>& list) {
    for (const auto& r : list)
        if (r.g == rec.g && r.n == rec.n) return false;
    list.push_back(rec);
    return true;
}

namespace detail {

struct SearchDriver {
    const SearchConfig& cfg;
    const FactorSet& fs;
    const FieldContext& ctx;
    uint32_t bound;
    SearchResult out;

    bool hit_limit() {
        if (cfg.budget && out.nodes > *cfg.budget) {
            out.truncated = true;
            return true;
        }
        return false;
    }

    void consider(const std::vector<size_t>& subset, uint32_t degsum, const BinaryPoly& theta) {
        if (!rate_bound_ok(theta.weight(), cfg.n, cfg.r_min)) return;
        uint32_t run = max_cyclic_run(theta, cfg.n);
        if (!run_bound_ok(run, cfg.d)) return;
        BinaryPoly u = ms_inverse(theta, ctx);
        if (!is_nondegenerate(u, cfg.n)) return;

        CyclicCode code = build_code(u, cfg.n);
        CodeRecord rec;
        rec.n = cfg.n;
        rec.k = cfg.n - static_cast<uint32_t>(theta.weight());
        rec.subset.reserve(subset.size());
        for (size_t i : subset) rec.subset.push_back(i + 1);
        rec.u = u;
        rec.theta = theta;
        rec.g = code.g;
        rec.weight = degsum;
        rec.r_theta = run;
        rec.bch_bound = run + 1;
        rec.orthogonal = is_orthogonal(u, cfg.n);
        rec.dedup_key = "n=" + std::to_string(cfg.n) + ";g=" + poly_to_string(code.g);

        if (dedup_insert(rec, out.records) && cfg.max_results && out.records.size() >= *cfg.max_results)
            out.truncated = true;
    }

    void dfs(size_t pos, std::vector<size_t>& subset, uint32_t degsum, const BinaryPoly& theta) {
        for (size_t i = pos; i < fs.count(); ++i) {
            uint32_t di = static_cast<uint32_t>(fs.entries[i].f.degree());
            // entries sorted ascending by degree: once one factor
            // overflows the remaining budget, all later ones do
            if (degsum + di > bound) break;
            ++out.nodes;
            if (hit_limit()) return;
            subset.push_back(i);
            BinaryPoly next_theta = theta + fs.entries[i].theta;
            consider(subset, degsum + di, next_theta);
            if (out.truncated) {
                subset.pop_back();
                return;
            }
            dfs(i + 1, subset, degsum + di, next_theta);
            subset.pop_back();
            if (out.truncated) return;
        }
    }
};

}  // namespace detail

// The full bounded tree is explored depth-first; results are exhaustive
// within the three bounds unless the node budget or result cap truncates.
inline SearchResult code_search(const SearchConfig& cfg, const FactorSet& fs, const FieldContext& ctx) {
    if (cfg.n != fs.n || cfg.n != ctx.n()) throw LengthMismatch("search/factor-set/field lengths disagree");
    if (cfg.r_min < 0.0 || cfg.r_min >= 1.0) throw Error("r_min must lie in [0,1)");
    if (cfg.d < 1) throw Error("d must be positive");
    if (!fs.idempotents_attached()) throw Error("factor set has no primitive idempotents attached");

    detail::SearchDriver drv{cfg, fs, ctx, weight_bound(cfg.n, cfg.delta), {}};
    std::vector<size_t> subset;
    drv.dfs(0, subset, 0, BinaryPoly::zero());

    std::sort(drv.out.records.begin(), drv.out.records.end(), [](const CodeRecord& a, const CodeRecord& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        uint32_t ra = a.n - a.k, rb = b.n - b.k;
        if (ra != rb) return ra < rb;
        return a.subset < b.subset;
    });
    return drv.out;
}

}  // namespace msldpc

#endif
