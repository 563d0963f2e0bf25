#ifndef MSLDPC_BINARY_POLY_HPP
#define MSLDPC_BINARY_POLY_HPP

// Polynomials over GF(2): exact arithmetic in GF(2)[x] and modular
// arithmetic in GF(2)[x]/(x^n+1), with the support-level utilities
// (weight, cyclic runs, idempotency) the code construction relies on.
//
// The public representation is the support set, i.e. the sorted list of
// exponents whose coefficient is 1. The search side of the library only
// ever touches very sparse polynomials; gcd and division convert to a
// dense bit-packed form internally.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace msldpc {

class BinaryPoly {
   public:
    BinaryPoly() = default;

    // Builds from an arbitrary exponent list; repeated exponents cancel in
    // pairs (coefficients are mod 2).
    static BinaryPoly from_support(std::vector<uint32_t> exps) {
        std::sort(exps.begin(), exps.end());
        std::vector<uint32_t> sup;
        sup.reserve(exps.size());
        for (size_t i = 0; i < exps.size();) {
            size_t j = i;
            while (j < exps.size() && exps[j] == exps[i]) ++j;
            if ((j - i) % 2 != 0) sup.push_back(exps[i]);
            i = j;
        }
        BinaryPoly p;
        p.sup_ = std::move(sup);
        return p;
    }

    static BinaryPoly zero() { return BinaryPoly{}; }
    static BinaryPoly one() { return monomial(0); }

    static BinaryPoly monomial(uint32_t e) {
        BinaryPoly p;
        p.sup_ = {e};
        return p;
    }

    // x^n + 1 (the ambient modulus; n odd in all uses).
    static BinaryPoly xn_plus_one(uint32_t n) {
        BinaryPoly p;
        p.sup_ = {0, n};
        return p;
    }

    const std::vector<uint32_t>& support() const { return sup_; }
    size_t weight() const { return sup_.size(); }
    bool is_zero() const { return sup_.empty(); }
    bool is_one() const { return sup_.size() == 1 && sup_[0] == 0; }

    // Degree of the zero polynomial is -1 by convention.
    int64_t degree() const { return sup_.empty() ? -1 : static_cast<int64_t>(sup_.back()); }

    bool has_term(uint32_t e) const { return std::binary_search(sup_.begin(), sup_.end(), e); }

    bool reduced_mod(uint32_t n) const { return sup_.empty() || sup_.back() < n; }

    // Addition over GF(2) is symmetric difference of supports.
    BinaryPoly operator+(const BinaryPoly& rhs) const {
        BinaryPoly out;
        std::set_symmetric_difference(sup_.begin(), sup_.end(), rhs.sup_.begin(), rhs.sup_.end(),
                                      std::back_inserter(out.sup_));
        return out;
    }
    BinaryPoly& operator+=(const BinaryPoly& rhs) {
        *this = *this + rhs;
        return *this;
    }

    friend bool operator==(const BinaryPoly& a, const BinaryPoly& b) { return a.sup_ == b.sup_; }
    friend bool operator!=(const BinaryPoly& a, const BinaryPoly& b) { return !(a == b); }
    friend bool operator<(const BinaryPoly& a, const BinaryPoly& b) { return a.sup_ < b.sup_; }

   private:
    std::vector<uint32_t> sup_;  // sorted, no duplicates
};

namespace detail {

// Dense bit-packed GF(2)[x] scratch type used by gcd and division.
struct DensePoly {
    std::vector<uint64_t> w;

    static DensePoly from(const BinaryPoly& p) {
        DensePoly d;
        if (p.is_zero()) return d;
        d.w.assign(static_cast<size_t>(p.degree()) / 64 + 1, 0);
        for (uint32_t e : p.support()) d.w[e >> 6] ^= uint64_t(1) << (e & 63);
        return d;
    }

    BinaryPoly to_sparse() const {
        std::vector<uint32_t> sup;
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t bits = w[i];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                sup.push_back(static_cast<uint32_t>(i * 64 + b));
                bits &= bits - 1;
            }
        }
        return BinaryPoly::from_support(std::move(sup));
    }

    bool is_zero() const {
        for (uint64_t v : w)
            if (v) return false;
        return true;
    }

    int64_t degree() const {
        for (size_t i = w.size(); i-- > 0;)
            if (w[i]) return static_cast<int64_t>(i * 64 + 63 - __builtin_clzll(w[i]));
        return -1;
    }

    bool bit(int64_t e) const {
        size_t i = static_cast<size_t>(e) >> 6;
        return i < w.size() && ((w[i] >> (e & 63)) & 1);
    }

    void flip(int64_t e) {
        size_t i = static_cast<size_t>(e) >> 6;
        if (i >= w.size()) w.resize(i + 1, 0);
        w[i] ^= uint64_t(1) << (e & 63);
    }

    // this ^= other << shift
    void xor_shifted(const DensePoly& other, int64_t shift) {
        int64_t word_shift = shift >> 6;
        int bit_shift = static_cast<int>(shift & 63);
        size_t need = other.w.size() + static_cast<size_t>(word_shift) + 1;
        if (w.size() < need) w.resize(need, 0);
        for (size_t i = 0; i < other.w.size(); ++i) {
            uint64_t v = other.w[i];
            if (!v) continue;
            w[i + word_shift] ^= v << bit_shift;
            if (bit_shift) w[i + word_shift + 1] ^= v >> (64 - bit_shift);
        }
    }
};

// Schoolbook product; operand sizes in this library stay small.
inline DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.w.assign(a.w.size() + b.w.size() + 1, 0);
    for (size_t i = 0; i < a.w.size(); ++i) {
        uint64_t bits = a.w[i];
        while (bits) {
            unsigned bpos = static_cast<unsigned>(__builtin_ctzll(bits));
            out.xor_shifted(b, static_cast<int64_t>(i * 64 + bpos));
            bits &= bits - 1;
        }
    }
    return out;
}

// Quotient/remainder of num by den (den nonzero).
inline void dense_divmod(const DensePoly& num, const DensePoly& den, DensePoly& quot, DensePoly& rem) {
    int64_t dd = den.degree();
    rem = num;
    quot = DensePoly{};
    int64_t rd = rem.degree();
    while (rd >= dd) {
        if (rem.bit(rd)) {
            quot.flip(rd - dd);
            rem.xor_shifted(den, rd - dd);
            // the leading bit cancels by construction
        }
        --rd;
    }
}

}  // namespace detail

// Exact product in GF(2)[x].
inline BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b) {
    return detail::dense_mul(detail::DensePoly::from(a), detail::DensePoly::from(b)).to_sparse();
}

// Product modulo x^n+1: exponents fold mod n, coefficients mod 2.
inline BinaryPoly poly_mul_mod(const BinaryPoly& a, const BinaryPoly& b, uint32_t n) {
    if (!a.reduced_mod(n) || !b.reduced_mod(n)) throw LengthMismatch();
    std::vector<uint8_t> acc(n, 0);
    for (uint32_t ea : a.support())
        for (uint32_t eb : b.support()) {
            uint32_t e = ea + eb;
            if (e >= n) e -= n;
            acc[e] ^= 1;
        }
    std::vector<uint32_t> sup;
    for (uint32_t e = 0; e < n; ++e)
        if (acc[e]) sup.push_back(e);
    return BinaryPoly::from_support(std::move(sup));
}

// Monic gcd by the Euclidean algorithm (exact, not modular).
inline BinaryPoly poly_gcd(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    detail::DensePoly x = detail::DensePoly::from(a);
    detail::DensePoly y = detail::DensePoly::from(b);
    while (!y.is_zero()) {
        detail::DensePoly q, r;
        detail::dense_divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.to_sparse();
}

// Exact quotient; throws if den does not divide num.
inline BinaryPoly poly_divide_exact(const BinaryPoly& num, const BinaryPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    detail::DensePoly q, r;
    detail::dense_divmod(detail::DensePoly::from(num), detail::DensePoly::from(den), q, r);
    if (!r.is_zero()) throw NonzeroRemainder();
    return q.to_sparse();
}

// Remainder of num modulo den.
inline BinaryPoly poly_mod(const BinaryPoly& num, const BinaryPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial reduction by zero");
    detail::DensePoly q, r;
    detail::dense_divmod(detail::DensePoly::from(num), detail::DensePoly::from(den), q, r);
    return r.to_sparse();
}

// True iff the support is closed under doubling mod n, which over GF(2) is
// equivalent to p*p = p mod (x^n+1). The zero polynomial is idempotent.
inline bool is_idempotent(const BinaryPoly& p, uint32_t n) {
    if (!p.reduced_mod(n)) throw LengthMismatch();
    for (uint32_t e : p.support()) {
        uint32_t e2 = (2 * e) % n;
        if (!p.has_term(e2)) return false;
    }
    return true;
}

// Length of the longest run of consecutive exponents (taken cyclically
// mod n) that are all present in the support. Full support gives n,
// empty support gives 0.
inline uint32_t max_cyclic_run(const BinaryPoly& p, uint32_t n) {
    if (!p.reduced_mod(n)) throw LengthMismatch();
    if (p.weight() == n) return n;
    if (p.is_zero()) return 0;
    std::vector<uint8_t> present(n, 0);
    for (uint32_t e : p.support()) present[e] = 1;
    // scan two laps so wraparound runs are seen whole; support is proper,
    // so every run terminates
    uint32_t best = 0, cur = 0;
    for (uint32_t i = 0; i < 2 * n; ++i) {
        if (present[i % n]) {
            ++cur;
            if (cur > best) best = cur;
        } else {
            cur = 0;
        }
    }
    return std::min(best, n);
}

// Canonical text form: ascending exponents, "1+x^2+x^8". Exponent 0 prints
// as "1", exponent 1 as the bare variable. The zero polynomial prints "0".
inline std::string poly_to_string(const BinaryPoly& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (uint32_t e : p.support()) {
        if (!first) os << '+';
        first = false;
        if (e == 0)
            os << '1';
        else if (e == 1)
            os << var;
        else
            os << var << '^' << e;
    }
    return os.str();
}

// Parses the canonical form and common variants: either variable letter,
// optional whitespace, LaTeX-style braced exponents ("x^{12}").
inline BinaryPoly poly_parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '$') s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial text");
    if (s == "0") return BinaryPoly::zero();

    std::vector<uint32_t> sup;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw ParseError("empty term in '" + text + "'");

        if (term == "1") {
            sup.push_back(0);
            continue;
        }
        char v = term[0];
        if (!std::isalpha(static_cast<unsigned char>(v))) throw ParseError("bad term '" + term + "'");
        if (term.size() == 1) {
            sup.push_back(1);
            continue;
        }
        if (term[1] != '^') throw ParseError("bad term '" + term + "'");
        std::string digits = term.substr(2);
        if (digits.size() >= 2 && digits.front() == '{' && digits.back() == '}')
            digits = digits.substr(1, digits.size() - 2);
        if (digits.empty()) throw ParseError("missing exponent in '" + term + "'");
        uint64_t e = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad exponent in '" + term + "'");
            e = e * 10 + static_cast<uint64_t>(c - '0');
            if (e > (uint64_t(1) << 26)) throw ParseError("exponent too large in '" + term + "'");
        }
        sup.push_back(static_cast<uint32_t>(e));
    }
    return BinaryPoly::from_support(std::move(sup));
}

}  // namespace msldpc

#endif
