#pragma once

/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination (rank, null space) over a field.
 */

#include <cstddef>
#include <vector>

namespace qescal {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == F(0)) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const F inv = F(1) / m[r][c];
        for (auto& v : m[r]) v = v * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F(0)) continue;
            const F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column (that entry set to 1).
template <class F>
std::vector<std::vector<F>> null_space(Matrix<F> m, std::size_t cols) {
    std::vector<std::vector<F>> basis;
    if (m.empty()) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<F> v(cols, F(0));
            v[c] = F(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qescal
