#pragma once

#include "kleinjac/integer_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kleinjac {

using Gf2Vector = std::vector<std::uint8_t>;

/// Basis of { k in GF(2)^n : M k = 0 mod 2 } for a square integer matrix M.
/// One basis vector per free column of the reduced row echelon form.
inline std::vector<Gf2Vector> gf2_kernel(const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("gf2_kernel: matrix must be square");
    const std::size_t n = m.rows();

    std::vector<Gf2Vector> rows(n, Gf2Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<std::uint8_t>(m(i, j) % 2 != 0);

    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(n, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && rows[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            for (std::size_t j = c; j < n; ++j) rows[i][j] ^= rows[r][j];
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::vector<Gf2Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Gf2Vector v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kleinjac
