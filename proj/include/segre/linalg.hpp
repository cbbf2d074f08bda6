/*
   Copyright 2026 The segre-tools Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEGRE_LINALG_HPP
#define SEGRE_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace segre {

/// Dense row-major matrix over a prime field.
using Matrix = std::vector<std::vector<std::uint32_t>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Row echelon form in place; returns the rank.
inline std::size_t row_reduce(Matrix& m, const PrimeField& f) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const auto inv = f.inv(m[rank][c]);
        for (auto& v : m[rank]) v = f.mul(v, inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const auto factor = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t matrix_rank(Matrix m, const PrimeField& f) { return row_reduce(m, f); }

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> matrix_inverse(const Matrix& m, const PrimeField& f) {
    const std::size_t n = m.size();
    Matrix aug(n, std::vector<std::uint32_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    if (row_reduce(aug, f) < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (aug[i][i] != 1) return std::nullopt;
    Matrix inv(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Matrix matrix_multiply(const Matrix& a, const Matrix& b, const PrimeField& f) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix r(n, std::vector<std::uint32_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) r[i][j] = f.add(r[i][j], f.mul(a[i][l], b[l][j]));
    return r;
}

/// Uniformly random invertible matrix (re-drawn until invertible).
inline Matrix random_invertible_matrix(std::size_t n, FieldRng& rng) {
    for (;;) {
        Matrix m(n, std::vector<std::uint32_t>(n));
        for (auto& row : m)
            for (auto& v : row) v = rng.element();
        if (matrix_rank(m, rng.field()) == n) return m;
    }
}

}  // namespace segre

#endif  // SEGRE_LINALG_HPP
