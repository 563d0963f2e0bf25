#ifndef MSLDPC_CYCLIC_CODE_HPP
#define MSLDPC_CYCLIC_CODE_HPP

// From an accepted defining polynomial u(x) to a concrete cyclic code:
// generator/check polynomials, circulant parity-check and generator
// matrices, the BCH bound, the orthogonality (4-cycle) test, and exact
// minimum distance by Gray-coded codeword enumeration at desk scale.

#include <cstdint>
#include <string>
#include <vector>

#include "binary_poly.hpp"
#include "errors.hpp"
#include "gf2m.hpp"

namespace msldpc {

struct CyclicCode {
    uint32_t n = 0;
    uint32_t k = 0;
    BinaryPoly g;  // generator, degree n-k
    BinaryPoly h;  // check polynomial gcd(x^n+1, u), degree k
    BinaryPoly u;  // defining polynomial
};

// h = gcd(x^n+1, u), g = (x^n+1)/h. Rejects k = 0.
inline CyclicCode build_code(const BinaryPoly& u, uint32_t n) {
    if (u.is_zero()) throw ZeroPolynomial("defining polynomial is zero");
    if (!u.reduced_mod(n)) throw LengthMismatch();
    CyclicCode c;
    c.n = n;
    c.u = u;
    c.h = poly_gcd(BinaryPoly::xn_plus_one(n), u);
    c.g = poly_divide_exact(BinaryPoly::xn_plus_one(n), c.h);
    c.k = static_cast<uint32_t>(c.h.degree());
    if (c.k == 0) throw ZeroDimension();
    return c;
}

// Classical BCH lower bound on dmin: a cyclic run of r consecutive nonzero
// coefficients in theta means r consecutive powers of alpha are roots of g,
// hence dmin >= r+1. (The run count itself is what r_theta reports.)
inline uint32_t bch_bound(const BinaryPoly& theta, uint32_t n) {
    return max_cyclic_run(theta, n) + 1;
}

// Same bound computed from field evaluations, usable for any nonzero u
// (idempotent or not): the run is over exponents j with u(alpha^j) != 0.
inline uint32_t bch_bound_from_values(const BinaryPoly& u, const FieldContext& ctx) {
    const uint32_t n = ctx.n();
    std::vector<uint32_t> nonroots;
    for (uint32_t j = 0; j < n; ++j)
        if (!ctx.eval_at_alpha_pow(u, j).is_zero()) nonroots.push_back(j);
    return max_cyclic_run(BinaryPoly::from_support(std::move(nonroots)), n) + 1;
}

// Sparse row-index view of a binary parity-check matrix, the common form
// consumed by the decoder and the alist writer.
struct CheckMatrix {
    uint32_t n_cols = 0;
    std::vector<std::vector<uint32_t>> rows;  // sorted column indices per row
};

// n x n circulant built from u: row i has support {(i - e) mod n}, i.e.
// the matrix of multiplication by u(x) mod x^n+1. Its columns are the n
// cyclic shifts of u, its rank is n-k, and its null space is exactly the
// code generated by g.
struct CirculantMatrix {
    uint32_t n = 0;
    std::vector<uint32_t> first_row;  // support of u

    std::vector<uint32_t> row(uint32_t i) const {
        std::vector<uint32_t> r;
        r.reserve(first_row.size());
        for (uint32_t e : first_row) r.push_back((i + n - e % n) % n);
        std::sort(r.begin(), r.end());
        return r;
    }

    // Full n-row form, or the first n-k rows (any n-k consecutive rows of
    // the circulant are linearly independent).
    CheckMatrix checks(bool reduced = false, uint32_t k = 0) const {
        CheckMatrix m;
        m.n_cols = n;
        uint32_t nrows = reduced ? n - k : n;
        m.rows.reserve(nrows);
        for (uint32_t i = 0; i < nrows; ++i) m.rows.push_back(row(i));
        return m;
    }
};

inline CirculantMatrix parity_check_matrix(const BinaryPoly& u, uint32_t n) {
    if (u.is_zero()) throw ZeroPolynomial("parity polynomial is zero");
    if (!u.reduced_mod(n)) throw LengthMismatch();
    return {n, u.support()};
}

// Bit-packed GF(2) matrix, rows stored as 64-bit words.
class BitMatrix {
   public:
    BitMatrix(uint32_t rows, uint32_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(size_t(rows) * words_per_row_, 0) {}

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    uint32_t words_per_row() const { return words_per_row_; }

    void set(uint32_t r, uint32_t c) { data_[size_t(r) * words_per_row_ + (c >> 6)] |= uint64_t(1) << (c & 63); }
    bool get(uint32_t r, uint32_t c) const {
        return (data_[size_t(r) * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }
    const uint64_t* row_words(uint32_t r) const { return data_.data() + size_t(r) * words_per_row_; }
    uint64_t* row_words(uint32_t r) { return data_.data() + size_t(r) * words_per_row_; }

    void xor_row_into(uint32_t src, uint64_t* dst) const {
        const uint64_t* s = row_words(src);
        for (uint32_t w = 0; w < words_per_row_; ++w) dst[w] ^= s[w];
    }

   private:
    uint32_t rows_, cols_, words_per_row_;
    std::vector<uint64_t> data_;
};

// k x n generator matrix with rows x^i * g(x).
inline BitMatrix generator_matrix(const CyclicCode& code) {
    BitMatrix g(code.k, code.n);
    for (uint32_t i = 0; i < code.k; ++i)
        for (uint32_t e : code.g.support()) g.set(i, e + i);  // deg g = n-k, so e+i < n
    return g;
}

inline uint32_t gf2_rank(BitMatrix m) {
    uint32_t rank = 0;
    for (uint32_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        uint32_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (uint32_t w = 0; w < m.words_per_row(); ++w)
                std::swap(m.row_words(pivot)[w], m.row_words(rank)[w]);
        for (uint32_t r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.xor_row_into(rank, m.row_words(r));
        ++rank;
    }
    return rank;
}

inline BitMatrix to_bit_matrix(const CheckMatrix& h) {
    BitMatrix m(static_cast<uint32_t>(h.rows.size()), h.n_cols);
    for (uint32_t r = 0; r < h.rows.size(); ++r)
        for (uint32_t c : h.rows[r]) m.set(r, c);
    return m;
}

// True iff all pairwise support differences mod n are distinct, i.e. the
// circulant factor graph has no 4-cycles and the checks are orthogonal on
// every bit.
inline bool is_orthogonal(const BinaryPoly& u, uint32_t n) {
    if (!u.reduced_mod(n)) throw LengthMismatch();
    const auto& sup = u.support();
    std::vector<uint8_t> seen(n, 0);
    for (uint32_t a : sup)
        for (uint32_t b : sup) {
            if (a == b) continue;
            uint32_t d = (a + n - b) % n;
            if (seen[d]) return false;
            seen[d] = 1;
        }
    return true;
}

// Minimum Hamming weight over all 2^k - 1 nonzero codewords, enumerated by
// Gray-code message stepping (each step XORs one generator row into the
// running codeword).
inline uint32_t min_distance_exact(const CyclicCode& code, uint64_t budget = uint64_t(1) << 28) {
    if (code.k >= 63 || (uint64_t(1) << code.k) > budget) throw BudgetExceeded("2^k exceeds enumeration budget");
    BitMatrix g = generator_matrix(code);
    const uint32_t words = g.words_per_row();
    std::vector<uint64_t> cw(words, 0);
    uint32_t best = code.n + 1;
    const uint64_t total = (uint64_t(1) << code.k) - 1;
    for (uint64_t m = 1; m <= total; ++m) {
        uint32_t flip = static_cast<uint32_t>(__builtin_ctzll(m));  // Gray step
        g.xor_row_into(flip, cw.data());
        uint32_t w = 0;
        for (uint32_t i = 0; i < words; ++i) w += static_cast<uint32_t>(__builtin_popcountll(cw[i]));
        if (w < best) best = w;
    }
    return best;
}

}  // namespace msldpc

#endif
