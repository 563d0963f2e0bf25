#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "msldpc/binary_poly.hpp"
#include "oracles.hpp"

using namespace msldpc;

static BinaryPoly bp(std::vector<uint32_t> sup) { return BinaryPoly::from_support(std::move(sup)); }

TEST_CASE("support construction cancels duplicate exponents", "[polyring]") {
    CHECK(bp({3, 3}).is_zero());
    CHECK(bp({0, 2, 2, 2}) == bp({0, 2}));
    CHECK(bp({}).is_zero());
    CHECK(bp({5, 1, 0}).support() == std::vector<uint32_t>({0, 1, 5}));
}

TEST_CASE("degree and weight conventions", "[polyring]") {
    CHECK(BinaryPoly::zero().degree() == -1);
    CHECK(BinaryPoly::zero().weight() == 0);
    CHECK(BinaryPoly::one().degree() == 0);
    CHECK(bp({0, 1, 5}).degree() == 5);
    CHECK(bp({0, 1, 5}).weight() == 3);
}

TEST_CASE("modular product", "[polyring]") {
    const uint32_t n = 7;
    BinaryPoly u = bp({0, 1, 2, 4});

    SECTION("multiplication by one is the identity") {
        CHECK(poly_mul_mod(u, BinaryPoly::one(), n) == u);
    }
    SECTION("squaring the Hamming idempotent reproduces it") {
        CHECK(poly_mul_mod(u, u, n) == u);
    }
    SECTION("general product against the expansion oracle") {
        BinaryPoly a = bp({0, 1});
        BinaryPoly b = bp({0, 2, 3});
        CHECK(poly_mul_mod(a, b, n) == bp({0, 1, 2, 4}));
    }
    SECTION("operands must be reduced") {
        CHECK_THROWS_AS(poly_mul_mod(bp({9}), u, n), LengthMismatch);
    }
}

TEST_CASE("frobenius squaring doubles exponents", "[polyring]") {
    std::mt19937 rng(42);
    for (uint32_t n : {7u, 15u, 21u, 51u, 93u}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<uint32_t> sup;
            for (uint32_t e = 0; e < n; ++e)
                if (rng() % 4 == 0) sup.push_back(e);
            BinaryPoly p = bp(sup);
            std::vector<uint32_t> doubled;
            for (uint32_t e : sup) doubled.push_back((2 * e) % n);
            CHECK(poly_mul_mod(p, p, n) == bp(doubled));
        }
    }
}

TEST_CASE("gcd", "[polyring]") {
    SECTION("gcd with zero returns the other operand") {
        BinaryPoly a = bp({0, 1, 3});
        CHECK(poly_gcd(a, BinaryPoly::zero()) == a);
        CHECK(poly_gcd(BinaryPoly::zero(), a) == a);
    }
    SECTION("both zero is rejected") {
        CHECK_THROWS_AS(poly_gcd(BinaryPoly::zero(), BinaryPoly::zero()), BothZero);
    }
    SECTION("x^7+1 against the Hamming idempotent") {
        CHECK(poly_gcd(BinaryPoly::xn_plus_one(7), bp({0, 1, 2, 4})) == bp({0, 1, 2, 4}));
    }
    SECTION("x^7+1 against x+x^2+x^4") {
        CHECK(poly_gcd(BinaryPoly::xn_plus_one(7), bp({1, 2, 4})) == bp({0, 1, 3}));
    }
    SECTION("random pairs agree with the coefficient-vector oracle") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<uint32_t> sa, sb;
            for (uint32_t e = 0; e < 40; ++e) {
                if (rng() % 3 == 0) sa.push_back(e);
                if (rng() % 3 == 0) sb.push_back(e);
            }
            BinaryPoly a = bp(sa), b = bp(sb);
            if (a.is_zero() && b.is_zero()) continue;
            BinaryPoly g = poly_gcd(a, b);
            CHECK(g == oracle::to_sparse(oracle::gcd(oracle::from_sparse(a), oracle::from_sparse(b))));
            if (!g.is_zero()) {
                if (!a.is_zero()) CHECK_NOTHROW(poly_divide_exact(a, g));
                if (!b.is_zero()) CHECK_NOTHROW(poly_divide_exact(b, g));
            }
        }
    }
}

TEST_CASE("exact division", "[polyring]") {
    SECTION("(x^7+1)/(x^4+x^2+x+1) = x^3+x+1") {
        CHECK(poly_divide_exact(BinaryPoly::xn_plus_one(7), bp({0, 1, 2, 4})) == bp({0, 1, 3}));
    }
    SECTION("a/a = 1") {
        BinaryPoly a = bp({0, 2, 5});
        CHECK(poly_divide_exact(a, a) == BinaryPoly::one());
    }
    SECTION("(x^7+1)/(x+1) is the all-ones polynomial") {
        CHECK(poly_divide_exact(BinaryPoly::xn_plus_one(7), bp({0, 1})) == bp({0, 1, 2, 3, 4, 5, 6}));
    }
    SECTION("non-divisors are rejected") {
        CHECK_THROWS_AS(poly_divide_exact(BinaryPoly::xn_plus_one(7), bp({0, 2})), NonzeroRemainder);
    }
    SECTION("division by zero") {
        CHECK_THROWS_AS(poly_divide_exact(bp({0, 1}), BinaryPoly::zero()), DivisionByZero);
    }
    SECTION("product then exact division round-trips") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<uint32_t> sa, sb;
            for (uint32_t e = 0; e < 30; ++e) {
                if (rng() % 3 == 0) sa.push_back(e);
                if (rng() % 3 == 0) sb.push_back(e);
            }
            BinaryPoly a = bp(sa), b = bp(sb);
            if (b.is_zero()) continue;
            CHECK(poly_divide_exact(poly_mul(a, b), b) == a);
        }
    }
}

TEST_CASE("idempotency test", "[polyring]") {
    CHECK(is_idempotent(bp({0, 1, 2, 4}), 7));
    CHECK_FALSE(is_idempotent(bp({0, 2, 8, 31, 32, 35, 47}), 93));  // 2*2=4 missing
    CHECK(is_idempotent(BinaryPoly::zero(), 7));
    CHECK(is_idempotent(bp({0}), 7));
    CHECK_FALSE(is_idempotent(bp({1}), 7));
}

TEST_CASE("idempotency equals closure under squaring, exhaustively", "[polyring]") {
    // all 2^n supports for a tiny n, checked against p*p == p
    const uint32_t n = 9;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<uint32_t> sup;
        for (uint32_t e = 0; e < n; ++e)
            if ((mask >> e) & 1) sup.push_back(e);
        BinaryPoly p = bp(sup);
        CHECK(is_idempotent(p, n) == (poly_mul_mod(p, p, n) == p));
    }
}

TEST_CASE("max cyclic run", "[polyring]") {
    CHECK(max_cyclic_run(bp({0, 1, 2, 3, 4, 5, 6}), 7) == 7);
    CHECK(max_cyclic_run(bp({3, 5, 6}), 7) == 2);
    CHECK(max_cyclic_run(bp({0, 1, 2, 4}), 7) == 3);
    CHECK(max_cyclic_run(BinaryPoly::zero(), 7) == 0);
    CHECK(max_cyclic_run(bp({5, 6, 0}), 7) == 3);  // wraparound run
}

TEST_CASE("max cyclic run is shift invariant", "[polyring]") {
    std::mt19937 rng(3);
    const uint32_t n = 31;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint32_t> sup;
        for (uint32_t e = 0; e < n; ++e)
            if (rng() % 3 == 0) sup.push_back(e);
        BinaryPoly p = bp(sup);
        uint32_t run = max_cyclic_run(p, n);
        uint32_t shift = rng() % n;
        std::vector<uint32_t> shifted;
        for (uint32_t e : sup) shifted.push_back((e + shift) % n);
        CHECK(max_cyclic_run(bp(shifted), n) == run);
    }
}

TEST_CASE("canonical text round trip", "[polyring]") {
    CHECK(poly_to_string(bp({0, 2, 8})) == "1+x^2+x^8");
    CHECK(poly_to_string(bp({1})) == "x");
    CHECK(poly_to_string(BinaryPoly::zero()) == "0");
    CHECK(poly_to_string(bp({0, 3, 5, 6}), 'z') == "1+z^3+z^5+z^6");

    CHECK(poly_parse("1+x^2+x^8") == bp({0, 2, 8}));
    CHECK(poly_parse("0") == BinaryPoly::zero());
    CHECK(poly_parse(" 1 + x + x^4 ") == bp({0, 1, 4}));
    CHECK(poly_parse("z^3+z^5+z^6+1") == bp({0, 3, 5, 6}));
    CHECK(poly_parse("1+x^3+x^6+x^{12}") == bp({0, 3, 6, 12}));  // pasted table form
    CHECK_THROWS_AS(poly_parse(""), ParseError);
    CHECK_THROWS_AS(poly_parse("1+^3"), ParseError);
    CHECK_THROWS_AS(poly_parse("x^"), ParseError);
    CHECK_THROWS_AS(poly_parse("x^abc"), ParseError);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint32_t> sup;
        for (uint32_t e = 0; e < 60; ++e)
            if (rng() % 4 == 0) sup.push_back(e);
        BinaryPoly p = bp(sup);
        CHECK(poly_parse(poly_to_string(p)) == p);
    }
}
