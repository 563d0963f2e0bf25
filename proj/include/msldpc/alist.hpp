#ifndef MSLDPC_ALIST_HPP
#define MSLDPC_ALIST_HPP

// MacKay alist interchange for sparse binary matrices. Layout, bit-exact:
//   line 1: n m_rows
//   line 2: max_col_wt max_row_wt
//   line 3: the n column weights
//   line 4: the m row weights
//   then per-column 1-based row indices, zero-padded to max_col_wt,
//   then per-row 1-based column indices, zero-padded to max_row_wt.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cyclic_code.hpp"
#include "errors.hpp"

namespace msldpc {

inline void write_alist(const CheckMatrix& h, std::ostream& os) {
    const uint32_t n = h.n_cols;
    const uint32_t m = static_cast<uint32_t>(h.rows.size());
    std::vector<std::vector<uint32_t>> cols(n);
    for (uint32_t r = 0; r < m; ++r)
        for (uint32_t c : h.rows[r]) cols.at(c).push_back(r);

    size_t max_col = 0, max_row = 0;
    for (const auto& col : cols) max_col = std::max(max_col, col.size());
    for (const auto& row : h.rows) max_row = std::max(max_row, row.size());

    os << n << ' ' << m << '\n';
    os << max_col << ' ' << max_row << '\n';
    for (uint32_t c = 0; c < n; ++c) os << cols[c].size() << (c + 1 < n ? ' ' : '\n');
    for (uint32_t r = 0; r < m; ++r) os << h.rows[r].size() << (r + 1 < m ? ' ' : '\n');
    for (uint32_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < max_col; ++i)
            os << (i < cols[c].size() ? cols[c][i] + 1 : 0) << (i + 1 < max_col ? ' ' : '\n');
    }
    for (uint32_t r = 0; r < m; ++r) {
        for (size_t i = 0; i < max_row; ++i)
            os << (i < h.rows[r].size() ? h.rows[r][i] + 1 : 0) << (i + 1 < max_row ? ' ' : '\n');
    }
}

inline std::string alist_to_string(const CheckMatrix& h) {
    std::ostringstream os;
    write_alist(h, os);
    return os.str();
}

inline CheckMatrix parse_alist(std::istream& is) {
    auto next = [&is]() {
        long long v;
        if (!(is >> v) || v < 0) throw ParseError("malformed alist");
        return static_cast<uint64_t>(v);
    };
    uint64_t n = next(), m = next();
    if (n == 0 || m == 0 || n > (1u << 26) || m > (1u << 26)) throw ParseError("alist dimensions out of range");
    uint64_t max_col = next(), max_row = next();
    std::vector<uint64_t> col_wt(n), row_wt(m);
    for (auto& w : col_wt) w = next();
    for (auto& w : row_wt) w = next();

    CheckMatrix h;
    h.n_cols = static_cast<uint32_t>(n);
    h.rows.assign(m, {});
    // column blocks: consistency only, entries are re-derived from rows
    std::vector<std::vector<uint32_t>> cols(n);
    for (uint64_t c = 0; c < n; ++c)
        for (uint64_t i = 0; i < max_col; ++i) {
            uint64_t r = next();
            if (r == 0) continue;
            if (r > m) throw ParseError("alist row index out of range");
            cols[c].push_back(static_cast<uint32_t>(r - 1));
        }
    for (uint64_t r = 0; r < m; ++r)
        for (uint64_t i = 0; i < max_row; ++i) {
            uint64_t c = next();
            if (c == 0) continue;
            if (c > n) throw ParseError("alist column index out of range");
            h.rows[r].push_back(static_cast<uint32_t>(c - 1));
        }
    for (uint64_t c = 0; c < n; ++c)
        if (cols[c].size() != col_wt[c]) throw ParseError("alist column weight mismatch");
    for (uint64_t r = 0; r < m; ++r) {
        if (h.rows[r].size() != row_wt[r]) throw ParseError("alist row weight mismatch");
        std::sort(h.rows[r].begin(), h.rows[r].end());
    }
    return h;
}

}  // namespace msldpc

#endif
