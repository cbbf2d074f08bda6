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

#ifndef SEGRE_SEGRE_HPP
#define SEGRE_SEGRE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chow.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace segre {

/// Projective degrees g_0..g_n of the rational map P^n --> P^N given by an
/// equal-degree generating set.
struct ProjectiveDegrees {
    std::vector<std::int64_t> g;
    std::uint32_t d = 0;
    std::uint64_t seed = 0;
    std::uint32_t prime = 0;
};

/// Equal-degree generators {f_j * m : deg m = d - deg f_j} with d the largest
/// generator degree. The generated ideal agrees with I in degrees >= d, so
/// it has the same saturation.
inline std::pair<std::vector<SparsePolynomial>, std::uint32_t> equalize(const HomogeneousIdeal& ideal) {
    if (ideal.empty()) throw InputError("equalize: zero ideal");
    std::uint32_t d = 0;
    for (const auto& g : ideal.generators()) d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(g.degree()));
    const std::size_t nv = ideal.num_vars();
    std::vector<SparsePolynomial> out;
    for (const auto& g : ideal.generators()) {
        const auto gap = d - static_cast<std::uint32_t>(g.degree());
        Exponents e(nv, 0);
        auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
            if (var + 1 == nv) {
                e[var] = left;
                out.push_back(g * SparsePolynomial::monomial(ideal.field(), e));
                return;
            }
            for (std::uint32_t k = left + 1; k-- > 0;) {
                e[var] = k;
                self(self, var + 1, left - k);
            }
        };
        rec(rec, 0, gap);
    }
    return {std::move(out), d};
}

namespace detail {

/// Number of linearly independent polynomials in the list.
inline std::size_t linear_rank(const std::vector<SparsePolynomial>& polys) {
    if (polys.empty()) return 0;
    std::map<Exponents, std::size_t> column;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) column.try_emplace(e, column.size());
    Matrix m(polys.size(), std::vector<std::uint32_t>(column.size(), 0));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [e, c] : polys[r].terms()) m[r][column[e]] = c;
    return matrix_rank(m, polys[0].field());
}

/// Largest monomial dividing every polynomial in the list.
inline Exponents common_monomial_factor(const std::vector<SparsePolynomial>& polys, std::size_t nv) {
    Exponents g(nv, std::numeric_limits<std::uint32_t>::max());
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < nv; ++i) g[i] = std::min(g[i], e[i]);
    for (auto& v : g)
        if (v == std::numeric_limits<std::uint32_t>::max()) v = 0;
    return g;
}

inline SparsePolynomial divide_by_monomial(const SparsePolynomial& p, const Exponents& m) {
    SparsePolynomial r(p.num_vars(), p.field());
    for (const auto& [e, c] : p.terms()) {
        Exponents q = e;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= m[i];
        r.add_term(q, c);
    }
    return r;
}

/// Outcome of one projective-degree count.
enum class CountStatus { Ok, Degenerate };

/// g_i: points of P^n where `i` random combinations of the generators and
/// n - i random hyperplanes vanish, away from the base scheme. The linear
/// conditions are imposed by restricting to a random i-dimensional affine
/// chart u -> A u + b; points on the base scheme are removed by adjoining
/// 1 - T f for a random combination f of the generators; the count is the
/// number of standard monomials of the resulting zero-dimensional ideal.
inline std::pair<CountStatus, std::int64_t> count_projective_degree(const std::vector<SparsePolynomial>& gens,
                                                                    const std::vector<SparsePolynomial>& reduced,
                                                                    std::size_t i, std::uint64_t seed) {
    const PrimeField field = gens[0].field();
    const std::size_t nv = gens[0].num_vars();
    FieldRng rng(field, seed);

    // affine chart of a random i-plane: x_j = sum_k A[j][k] u_k + b_j
    std::vector<SparsePolynomial> images;
    for (std::size_t j = 0; j < nv; ++j) {
        SparsePolynomial img = SparsePolynomial::constant(i, field, rng.element());
        for (std::size_t k = 0; k < i; ++k) {
            Exponents e(i, 0);
            e[k] = 1;
            img.add_term(e, rng.element());
        }
        images.push_back(std::move(img));
    }

    auto combination = [&](const std::vector<SparsePolynomial>& list) {
        SparsePolynomial acc(nv, field);
        for (const auto& p : list) {
            SparsePolynomial t = p;
            acc += t.scale(rng.element());
        }
        return acc.substitute(images);
    };

    gb::Ring ring(i + 1, field);  // u_0..u_{i-1}, T
    std::vector<gb::Poly> system;
    for (std::size_t k = 0; k < i; ++k) {
        SparsePolynomial p = combination(reduced);
        system.push_back(gb::from_sparse(ring, p));
    }
    SparsePolynomial f = combination(gens);
    if (f.is_zero()) return {CountStatus::Degenerate, 0};
    gb::Poly aux;
    for (auto t : gb::from_sparse(ring, f)) {
        t.m.e[i] += 1;
        t.m.refresh();
        t.c = field.neg(t.c);
        aux.push_back(t);
    }
    aux.push_back({gb::Monomial{}, 1});
    gb::sort_poly(ring, aux);
    system.push_back(std::move(aux));

    const auto basis = gb::buchberger(ring, std::move(system));
    if (gb::is_unit_basis(basis)) return {CountStatus::Ok, 0};
    std::vector<gb::Monomial> leading;
    for (const auto& p : basis) leading.push_back(p.front().m);
    const auto kd = gb::krull_data(leading, ring.nvars);
    if (kd.krull_dim != 0) return {CountStatus::Degenerate, 0};
    return {CountStatus::Ok, kd.degree};
}

}  // namespace detail

/// Maximum re-draws of a degenerate random configuration.
inline constexpr int kMaxGenericityAttempts = 5;

/// Projective degrees of the map given by equal-degree `gens` of degree d.
/// The i-th count uses seed mix_seed(seed, i) (re-draws use
/// mix_seed(mix_seed(seed, i), attempt)), so counts are independent of each
/// other and of evaluation order.
inline ProjectiveDegrees projective_degrees(const std::vector<SparsePolynomial>& gens, std::uint32_t d,
                                            std::uint64_t seed) {
    if (gens.empty()) throw InputError("projective_degrees: no generators");
    for (const auto& g : gens)
        if (g.is_zero() || !g.is_homogeneous() || g.degree() != d)
            throw InputError("projective_degrees: generators must be homogeneous of degree " + std::to_string(d));
    const std::size_t n = gens[0].num_vars() - 1;
    ProjectiveDegrees out{std::vector<std::int64_t>(n + 1, 0), d, seed, gens[0].field().prime()};

    // a common monomial factor vanishes only on the base scheme, which the
    // saturating element already removes
    const Exponents content = detail::common_monomial_factor(gens, n + 1);
    std::vector<SparsePolynomial> reduced;
    for (const auto& g : gens) reduced.push_back(detail::divide_by_monomial(g, content));

    const std::size_t rank = detail::linear_rank(gens);
    for (std::size_t i = 0; i <= n; ++i) {
        // i combinations of fewer than i independent forms contain the ideal
        if (i > 0 && i >= rank) break;
        const std::uint64_t seed_i = mix_seed(seed, i);
        bool done = false;
        for (int attempt = 0; attempt < kMaxGenericityAttempts && !done; ++attempt) {
            auto [status, value] =
                detail::count_projective_degree(gens, reduced, i, attempt == 0 ? seed_i : mix_seed(seed_i, attempt));
            if (status == detail::CountStatus::Ok) {
                out.g[i] = value;
                done = true;
            }
        }
        if (!done)
            throw GenericityError("projective degree g_" + std::to_string(i) + " stayed degenerate after " +
                                  std::to_string(kMaxGenericityAttempts) + " random draws");
        // projective degrees vanish exactly beyond the dimension of the image
        if (out.g[i] == 0) break;
    }
    if (out.g[0] != 1) throw GenericityError("projective degree g_0 != 1; random configuration not generic");
    return out;
}

/// [P^n] - sum_i g_i H^i (1 + dH)^{-(i+1)}.
inline ChowClass segre_from_projective_degrees(const ProjectiveDegrees& pd) {
    const std::size_t n = pd.g.size() - 1;
    ChowClass s = ChowClass::fundamental(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (pd.g[i] == 0) continue;
        s -= line_series(ChowClass::linear(n, n - i, pd.g[i]), pd.d, -static_cast<long long>(i) - 1);
    }
    return s;
}

namespace detail {

/// Drops top-degree generators that already lie in the ideal of the
/// lower-degree ones (e.g. F in its own Jacobian ideal). Same ideal, smaller
/// equalization degree.
inline HomogeneousIdeal prune_top_degree(const HomogeneousIdeal& ideal) {
    HomogeneousIdeal current = ideal;
    for (;;) {
        long long top = 0;
        for (const auto& g : current.generators()) top = std::max(top, g.degree());
        HomogeneousIdeal lower(current.num_vars(), current.field());
        std::vector<SparsePolynomial> upper;
        for (const auto& g : current.generators()) {
            if (g.degree() < top)
                lower.add(g);
            else
                upper.push_back(g);
        }
        if (lower.empty()) return current;
        const GroebnerBasis basis = groebner_basis(lower);
        HomogeneousIdeal next = lower;
        bool dropped_all = true;
        for (const auto& g : upper) {
            if (!normal_form(g, basis).is_zero()) {
                next.add(g);
                dropped_all = false;
            }
        }
        if (!dropped_all) return next.generators().size() < current.generators().size() ? next : current;
        current = std::move(next);
    }
}

}  // namespace detail

/// Push-forward to A_*P^n of the Segre class of the subscheme V(I). The empty
/// scheme has Segre class zero.
inline ChowClass segre_class(const HomogeneousIdeal& ideal, std::uint64_t seed) {
    if (ideal.empty()) throw InputError("segre_class: zero ideal defines all of P^n, not a proper subscheme");
    const std::size_t n = ideal.ambient_dim();
    if (dim_degree(ideal).empty()) return ChowClass(n);
    const HomogeneousIdeal pruned = detail::prune_top_degree(ideal);
    auto [gens, d] = equalize(pruned);
    return segre_from_projective_degrees(projective_degrees(gens, d, seed));
}

}  // namespace segre

#endif  // SEGRE_SEGRE_HPP
