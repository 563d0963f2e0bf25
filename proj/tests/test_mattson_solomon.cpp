#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "msldpc/mattson_solomon.hpp"
#include "oracles.hpp"

using namespace msldpc;

namespace {

struct Setup {
    FieldContext ctx;
    FactorSet fs;
    explicit Setup(uint32_t n) : ctx(FieldContext::build(n)), fs(factorize(ctx)) {
        attach_primitive_idempotents(fs, ctx);
    }
};

BinaryPoly bp(std::vector<uint32_t> s) { return BinaryPoly::from_support(std::move(s)); }

}  // namespace

TEST_CASE("primitive idempotents at n=7", "[msdomain]") {
    Setup s(7);
    CHECK(s.fs.entries[0].theta == bp({0, 1, 2, 3, 4, 5, 6}));  // f = z+1 -> all-ones
    CHECK(s.fs.entries[1].theta == bp({0, 1, 2, 4}));           // f = z^3+z+1
    CHECK(s.fs.entries[2].theta == bp({0, 3, 5, 6}));           // f = z^3+z^2+1
}

TEST_CASE("primitive idempotent congruences and evaluations", "[msdomain]") {
    for (uint32_t n : {7u, 15u, 21u, 51u}) {
        Setup s(n);
        for (const auto& e : s.fs.entries) {
            const BinaryPoly& theta = e.theta;
            CHECK(is_idempotent(theta, n));
            // theta = 1 mod f, theta = 0 mod (z^n+1)/f
            CHECK(poly_mod(theta + BinaryPoly::one(), e.f).is_zero());
            BinaryPoly k = poly_divide_exact(BinaryPoly::xn_plus_one(n), e.f);
            CHECK(poly_mod(theta, k).is_zero());
            // theta(alpha^j) = 1 exactly when f(alpha^j) = 0
            for (uint32_t j = 0; j < n; ++j) {
                bool f_root = s.ctx.eval_at_alpha_pow(e.f, j).is_zero();
                CHECK(s.ctx.eval_at_alpha_pow(theta, j).is_one() == f_root);
            }
        }
    }
}

TEST_CASE("primitive idempotent rejects non-factors", "[msdomain]") {
    Setup s(7);
    CHECK_THROWS_AS(primitive_idempotent(bp({0, 2}), s.fs, s.ctx), NotAFactor);
}

TEST_CASE("unity decomposition and pairwise orthogonality", "[msdomain]") {
    for (uint32_t n : {7u, 15u, 21u, 51u, 63u}) {
        Setup s(n);
        BinaryPoly sum;
        for (const auto& e : s.fs.entries) sum += e.theta;
        CHECK(sum == BinaryPoly::one());
        for (size_t i = 0; i < s.fs.count(); ++i) {
            CHECK(poly_mul_mod(s.fs.entries[i].theta, s.fs.entries[i].theta, n) == s.fs.entries[i].theta);
            for (size_t j = i + 1; j < s.fs.count(); ++j)
                CHECK(poly_mul_mod(s.fs.entries[i].theta, s.fs.entries[j].theta, n).is_zero());
        }
    }
}

TEST_CASE("transform of the Hamming idempotent", "[msdomain]") {
    Setup s(7);
    CHECK(ms_transform(BinaryPoly::zero(), s.ctx).is_zero());
    CHECK(ms_transform(bp({0, 1, 2, 4}), s.ctx) == bp({3, 5, 6}));
    CHECK(ms_transform(bp({0}), s.ctx) == bp({0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("inverse transform", "[msdomain]") {
    Setup s(7);
    CHECK(ms_inverse(BinaryPoly::zero(), s.ctx).is_zero());
    CHECK(ms_inverse(bp({3, 5, 6}), s.ctx) == bp({0, 1, 2, 4}));
    CHECK(ms_inverse(bp({0, 1, 2, 4}), s.ctx) == bp({1, 2, 4}));
}

TEST_CASE("non-idempotent inputs are rejected", "[msdomain]") {
    Setup s(7);
    CHECK_THROWS_AS(ms_transform(bp({1}), s.ctx), NotIdempotent);
    CHECK_THROWS_AS(ms_inverse(bp({1, 3}), s.ctx), NotIdempotent);
}

TEST_CASE("round trip and additivity, exhaustive at small n", "[msdomain]") {
    for (uint32_t n : {7u, 15u, 21u}) {
        Setup s(n);
        auto subsets = oracle::all_subsets(s.fs.count());
        std::vector<BinaryPoly> us, thetas;
        for (const auto& sub : subsets) {
            BinaryPoly theta = oracle::theta_of_subset(sub, s.fs);
            BinaryPoly u = ms_inverse(theta, s.ctx);
            CHECK(ms_transform(u, s.ctx) == theta);
            us.push_back(u);
            thetas.push_back(theta);
        }
        // additivity on a sweep of pairs
        for (size_t a = 0; a < subsets.size(); a += 3)
            for (size_t b = a; b < subsets.size(); b += 5) {
                BinaryPoly usum = us[a] + us[b];
                CHECK(ms_transform(usum, s.ctx) == thetas[a] + thetas[b]);
            }
    }
}

TEST_CASE("round trip sampled at larger n", "[msdomain]") {
    std::mt19937_64 rng(2026);
    for (uint32_t n : {51u, 63u}) {
        Setup s(n);
        for (int trial = 0; trial < 60; ++trial) {
            uint64_t mask = rng() & ((uint64_t(1) << s.fs.count()) - 1);
            BinaryPoly theta;
            for (size_t i = 0; i < s.fs.count(); ++i)
                if ((mask >> i) & 1) theta += s.fs.entries[i].theta;
            BinaryPoly u = ms_inverse(theta, s.ctx);
            CHECK(ms_transform(u, s.ctx) == theta);
        }
    }
}

TEST_CASE("spectral weight law", "[msdomain]") {
    Setup s(7);
    SECTION("single degree-3 factor") {
        auto w = spectral_weight_law({1}, s.fs);
        CHECK(w.weight_u == 3);
        CHECK(w.num_unity_roots == 3);
    }
    SECTION("all three factors") {
        auto w = spectral_weight_law({0, 1, 2}, s.fs);
        CHECK(w.weight_u == 7);
        CHECK(w.num_unity_roots == 6);
    }
    SECTION("the unit coset alone") {
        auto w = spectral_weight_law({0}, s.fs);
        CHECK(w.weight_u == 1);
        CHECK(w.num_unity_roots == 0);
    }
    SECTION("empty subset rejected") { CHECK_THROWS_AS(spectral_weight_law({}, s.fs), EmptySubset); }
}

TEST_CASE("spectral laws match direct measurement", "[msdomain]") {
    for (uint32_t n : {7u, 15u, 21u}) {
        Setup s(n);
        for (const auto& sub : oracle::all_subsets(s.fs.count())) {
            if (sub.empty()) continue;
            auto law = spectral_weight_law(sub, s.fs);
            BinaryPoly theta = oracle::theta_of_subset(sub, s.fs);
            BinaryPoly u = ms_inverse(theta, s.ctx);
            CHECK(law.weight_u == u.weight());
            uint32_t zeros = 0;
            for (uint32_t i = 0; i < n; ++i)
                if (s.ctx.eval_at_alpha_pow(u, i).is_zero()) ++zeros;
            CHECK(law.num_unity_roots == zeros);
            // k = deg gcd(x^n+1, u) as well
            if (!u.is_zero())
                CHECK(static_cast<int64_t>(law.num_unity_roots) ==
                      poly_gcd(BinaryPoly::xn_plus_one(n), u).degree());
        }
    }
}

TEST_CASE("gcd law: the spectrum splits z^n+1", "[msdomain]") {
    Setup s(21);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        uint64_t mask = rng() & ((uint64_t(1) << s.fs.count()) - 1);
        if (mask == 0 || mask + 1 == (uint64_t(1) << s.fs.count())) continue;
        BinaryPoly theta, in_prod = BinaryPoly::one(), out_prod = BinaryPoly::one();
        for (size_t i = 0; i < s.fs.count(); ++i) {
            if ((mask >> i) & 1) {
                theta += s.fs.entries[i].theta;
                in_prod = poly_mul(in_prod, s.fs.entries[i].f);
            } else {
                out_prod = poly_mul(out_prod, s.fs.entries[i].f);
            }
        }
        BinaryPoly h = poly_gcd(theta, BinaryPoly::xn_plus_one(21));
        CHECK(h == out_prod);
        CHECK(poly_divide_exact(BinaryPoly::xn_plus_one(21), h) == in_prod);
    }
}

TEST_CASE("spectral pair invariants hold for a search-grade pair", "[msdomain]") {
    Setup s(7);
    SpectralPair pair{bp({0, 1, 2, 4}), bp({3, 5, 6}), 7};
    CHECK(is_idempotent(pair.u, pair.n));
    CHECK(is_idempotent(pair.theta, pair.n));
    for (uint32_t i = 0; i < pair.n; ++i)
        CHECK(s.ctx.eval_at_alpha_pow(pair.theta, i).is_one() == pair.u.has_term(i));
    for (uint32_t j = 1; j <= pair.n; ++j)
        CHECK(s.ctx.eval_at_alpha_pow(pair.u, j).is_one() == pair.theta.has_term(pair.n - j));
}
