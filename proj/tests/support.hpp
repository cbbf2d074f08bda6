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

#ifndef SEGRE_TESTS_SUPPORT_HPP
#define SEGRE_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "segre/charclasses.hpp"
#include "segre/groebner.hpp"
#include "segre/linalg.hpp"
#include "segre/polynomial.hpp"

namespace segre::testing {

inline const PrimeField kField(2147483629);

inline SparsePolynomial poly(const std::string& text, std::size_t n, PrimeField f = kField) {
    return parse_polynomial(text, n, f);
}

inline HomogeneousIdeal ideal(std::initializer_list<const char*> gens, std::size_t n, PrimeField f = kField) {
    HomogeneousIdeal out(n + 1, f);
    for (const char* g : gens) out.add(parse_polynomial(g, n, f));
    return out;
}

/// Random form of degree d in the variables x_lo..x_{hi-1} of a ring with
/// num_vars variables.
inline SparsePolynomial block_form(std::size_t num_vars, std::size_t lo, std::size_t hi, std::uint32_t d,
                                   FieldRng& rng) {
    SparsePolynomial sub = random_form(hi - lo, d, rng);
    std::vector<SparsePolynomial> images;
    for (std::size_t j = lo; j < hi; ++j) images.push_back(SparsePolynomial::variable(num_vars, rng.field(), j));
    return sub.substitute(images);
}

/// Form of degree d in x_lo..x_{hi-1} with integer coefficients in
/// [-bound, bound], so it means the same polynomial over every prime.
inline SparsePolynomial small_block_form(std::size_t num_vars, std::size_t lo, std::size_t hi, std::uint32_t d,
                                         FieldRng& rng, int bound = 3) {
    const PrimeField& f = rng.field();
    for (;;) {
        SparsePolynomial p(num_vars, f);
        Exponents e(num_vars, 0);
        auto fill = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
            if (var + 1 == hi) {
                e[var] = static_cast<std::uint16_t>(left);
                const auto c = static_cast<std::int64_t>(rng.raw() % (2 * bound + 1)) - bound;
                p.add_term(e, f.from_int(c));
                e[var] = 0;
                return;
            }
            for (std::uint32_t k = 0; k <= left; ++k) {
                e[var] = static_cast<std::uint16_t>(k);
                self(self, var + 1, left - k);
            }
            e[var] = 0;
        };
        fill(fill, lo, d);
        if (!p.is_zero() && p.degree() == static_cast<int>(d)) return p;
    }
}

/// L U with unit triangular factors and entries in {-1, 0, 1}: invertible
/// over every prime, with small integer entries.
inline Matrix unimodular_matrix(std::size_t n, FieldRng& rng) {
    std::vector<std::vector<std::int64_t>> l(n, std::vector<std::int64_t>(n, 0)), u = l;
    for (std::size_t i = 0; i < n; ++i) {
        l[i][i] = u[i][i] = 1;
        for (std::size_t j = 0; j < i; ++j) l[i][j] = static_cast<std::int64_t>(rng.raw() % 3) - 1;
        for (std::size_t j = i + 1; j < n; ++j) u[i][j] = static_cast<std::int64_t>(rng.raw() % 3) - 1;
    }
    Matrix m(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += l[i][k] * u[k][j];
            m[i][j] = rng.field().from_int(s);
        }
    return m;
}

/// Ideals X in x0..x{k-1} and Y in x_k..x_n under one shared coordinate
/// change, all with small integer coefficients.
struct DisjointPair {
    HomogeneousIdeal x;
    HomogeneousIdeal y;
};

inline DisjointPair random_disjoint_pair(std::size_t n, FieldRng& rng) {
    const std::size_t nv = n + 1;
    const std::size_t k = 2 + rng.raw() % (nv - 3);
    HomogeneousIdeal x(nv, rng.field()), y(nv, rng.field());
    const std::size_t x_gens = 1 + rng.raw() % 2;
    for (std::size_t g = 0; g < x_gens; ++g)
        x.add(small_block_form(nv, 0, k, static_cast<std::uint32_t>(1 + rng.raw() % 2), rng));
    y.add(small_block_form(nv, k, nv, static_cast<std::uint32_t>(1 + rng.raw() % 2), rng));
    const Matrix m = unimodular_matrix(nv, rng);
    return {apply_linear_change(x, m), apply_linear_change(y, m)};
}

/// (prod d_k H) / prod (1 + d_k H): Segre class of a complete intersection.
inline ChowClass complete_intersection_segre(std::size_t n, const std::vector<long long>& degrees) {
    ChowClass c = ChowClass::fundamental(n);
    for (long long d : degrees) c = line_series(intersect(c, ChowClass::linear(n, n - 1, d)), d, -1);
    return c;
}

/// Total Chern class of a smooth complete intersection pushed to P^n.
inline ChowClass complete_intersection_chern(std::size_t n, const std::vector<long long>& degrees) {
    return cap_tangent(complete_intersection_segre(n, degrees));
}

}  // namespace segre::testing

#endif  // SEGRE_TESTS_SUPPORT_HPP
