#pragma once

// Small exact dense solves over Rational; internal to the kernel sources.

#include "gq/rational.hpp"

#include <optional>
#include <vector>

namespace gq::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<Matrix> invert(Matrix a) {
    const size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Least-structure solve of an overdetermined consistent system A x = b;
/// nullopt when inconsistent.  Columns beyond the rank get zero.
inline std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational pv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= pv;
        b[r] /= pv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            Rational f = a[rr][c];
            for (size_t j = c; j < cols; ++j) a[rr][j] -= f * a[r][j];
            b[rr] -= f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (b[rr] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

} // namespace gq::detail
