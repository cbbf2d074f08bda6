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

#include <map>

#include <gtest/gtest.h>

#include "segre/groebner.hpp"
#include "segre/linalg.hpp"
#include "support.hpp"

using namespace segre;
using segre::testing::ideal;
using segre::testing::kField;
using segre::testing::poly;

namespace {

std::vector<Exponents> monomials_of_degree(std::size_t nv, std::uint32_t d) {
    std::vector<Exponents> out;
    Exponents e(nv, 0);
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
        if (var + 1 == nv) {
            e[var] = left;
            out.push_back(e);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            e[var] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

// f (homogeneous of degree D) lies in I iff it is in the span of the
// products m * g with deg m = D - deg g.
bool member_by_linear_algebra(const SparsePolynomial& f, const HomogeneousIdeal& i) {
    const std::size_t nv = f.num_vars();
    const auto d = static_cast<std::uint32_t>(f.degree());
    const auto basis = monomials_of_degree(nv, d);
    std::map<Exponents, std::size_t> column;
    for (const auto& m : basis) column.emplace(m, column.size());
    Matrix rows;
    auto push = [&](const SparsePolynomial& p) {
        std::vector<std::uint32_t> row(column.size(), 0);
        for (const auto& [e, c] : p.terms()) row[column.at(e)] = c;
        rows.push_back(std::move(row));
    };
    for (const auto& g : i.generators()) {
        if (g.degree() > static_cast<long long>(d)) continue;
        for (const auto& m : monomials_of_degree(nv, d - static_cast<std::uint32_t>(g.degree())))
            push(g * SparsePolynomial::monomial(f.field(), m));
    }
    const std::size_t without = rows.empty() ? 0 : matrix_rank(rows, f.field());
    push(f);
    return matrix_rank(rows, f.field()) == without;
}

HomogeneousIdeal random_ideal(FieldRng& rng, std::size_t nv, std::size_t gens, std::uint32_t max_deg) {
    HomogeneousIdeal i(nv, rng.field());
    for (std::size_t k = 0; k < gens; ++k) {
        // sparse random forms keep the test ideals varied
        SparsePolynomial g(nv, rng.field());
        const auto d = 1 + static_cast<std::uint32_t>(rng.raw() % max_deg);
        const auto all = monomials_of_degree(nv, d);
        for (int t = 0; t < 3; ++t) g.add_term(all[rng.raw() % all.size()], rng.nonzero());
        i.add(g);
    }
    return i;
}

SparsePolynomial leading_term_poly(const GroebnerBasis& g, std::size_t k) {
    Exponents e(g.ring().nvars);
    const auto m = g.leading_monomials()[k];
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = m.e[v];
    return SparsePolynomial::monomial(g.ring().field, e);
}

}  // namespace

TEST(GroebnerBasis, LinearIdeal) {
    auto got = groebner_basis(ideal({"x0", "x0 + x1"}, 2)).generators();
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    EXPECT_EQ(got, (std::vector<SparsePolynomial>{poly("x0", 2), poly("x1", 2)}));
}

TEST(GroebnerBasis, OneReduction) {
    auto got = groebner_basis(ideal({"x0^2 + x1^2", "x1^2"}, 2)).generators();
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    EXPECT_EQ(got, (std::vector<SparsePolynomial>{poly("x0^2", 2), poly("x1^2", 2)}));
}

TEST(GroebnerBasis, TwistedCubicHasThreeQuadrics) {
    const auto g = groebner_basis(ideal({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, 3));
    ASSERT_EQ(g.size(), 3u);
    for (const auto& p : g.generators()) EXPECT_EQ(p.degree(), 2);
    std::vector<std::string> lead;
    for (std::size_t k = 0; k < g.size(); ++k) lead.push_back(leading_term_poly(g, k).to_string());
    std::sort(lead.begin(), lead.end());
    EXPECT_EQ(lead, (std::vector<std::string>{"x1*x2", "x1^2", "x2^2"}));
}

TEST(GroebnerBasis, UnitIdeal) {
    EXPECT_TRUE(groebner_basis(ideal({"x0", "1"}, 2)).is_unit());
    EXPECT_TRUE(groebner_basis(HomogeneousIdeal::unit(3, kField)).is_unit());
}

TEST(GroebnerBasis, ReducedAndMonic) {
    FieldRng rng(kField, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto i = random_ideal(rng, 4, 3, 3);
        const auto g = groebner_basis(i);
        const auto gens = g.generators();
        for (std::size_t a = 0; a < gens.size(); ++a) {
            // monic leading coefficient
            const auto lead = leading_term_poly(g, a);
            EXPECT_EQ(gens[a].terms().at(lead.terms().begin()->first), 1u);
            // no leading monomial divides any term of another element
            for (std::size_t b = 0; b < gens.size(); ++b) {
                if (a == b) continue;
                for (const auto& [e, c] : gens[b].terms()) {
                    bool divides = true;
                    for (std::size_t v = 0; v < e.size(); ++v)
                        divides = divides && g.leading_monomials()[a].e[v] <= e[v];
                    EXPECT_FALSE(divides);
                }
            }
        }
    }
}

TEST(GroebnerBasis, SPairsReduceToZero) {
    FieldRng rng(kField, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = groebner_basis(random_ideal(rng, 4, 3, 3));
        const auto gens = g.generators();
        const auto leads = g.leading_monomials();
        ASSERT_LE(gens.size(), 40u);
        if (g.is_unit()) continue;
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b) {
                const auto& ma = leads[a];
                const auto& mb = leads[b];
                Exponents ua(gens[a].num_vars()), ub(gens[a].num_vars());
                for (std::size_t v = 0; v < ua.size(); ++v) {
                    const auto l = std::max(ma.e[v], mb.e[v]);
                    ua[v] = l - ma.e[v];
                    ub[v] = l - mb.e[v];
                }
                const auto s = gens[a] * SparsePolynomial::monomial(kField, ua) -
                               gens[b] * SparsePolynomial::monomial(kField, ub);
                EXPECT_TRUE(normal_form(s, g).is_zero());
            }
    }
}

TEST(GroebnerBasis, Deterministic) {
    const auto i = ideal({"x0*x3 - x1*x2", "x0^2 + x3^2", "x1^3 - x2*x3^2"}, 3);
    EXPECT_EQ(groebner_basis(i).generators(), groebner_basis(i).generators());
}

TEST(NormalForm, Examples) {
    const auto g = groebner_basis(ideal({"x0"}, 2));
    EXPECT_TRUE(normal_form(poly("x0^2", 2), g).is_zero());
    EXPECT_EQ(normal_form(poly("x1", 2), g), poly("x1", 2));
    EXPECT_EQ(normal_form(poly("x0*x1 + x1^2", 2), g), poly("x1^2", 2));
}

TEST(NormalForm, AgreesWithLinearAlgebraOracle) {
    FieldRng rng(kField, 77);
    int members = 0, nonmembers = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t nv = 2 + rng.raw() % 3;  // n <= 3
        const auto i = random_ideal(rng, nv, 1 + rng.raw() % 3, 2);
        const auto g = groebner_basis(i);
        const auto d = static_cast<std::uint32_t>(2 + rng.raw() % 3);  // degree <= 4
        SparsePolynomial f = random_form(nv, d, rng);
        if (trial % 2 == 0) {
            // build a member: sum of random multiples of the generators
            f = SparsePolynomial(nv, kField);
            for (const auto& gen : i.generators())
                if (gen.degree() <= d) f += gen * random_form(nv, d - static_cast<std::uint32_t>(gen.degree()), rng);
            if (f.is_zero()) continue;
        }
        const bool oracle = member_by_linear_algebra(f, i);
        EXPECT_EQ(normal_form(f, g).is_zero(), oracle) << i.to_string() << " f=" << f.to_string();
        (oracle ? members : nonmembers)++;
    }
    EXPECT_GT(members, 10);
    EXPECT_GT(nonmembers, 10);
}

TEST(IdealOps, SumAndProduct) {
    EXPECT_EQ(ideal_sum(ideal({"x0"}, 2), ideal({"x1"}, 2)).generators(), ideal({"x0", "x1"}, 2).generators());
    EXPECT_TRUE(ideals_equal(ideal_product(ideal({"x0"}, 5), ideal({"x1", "x2"}, 5)), ideal({"x0*x1", "x0*x2"}, 5)));
    EXPECT_TRUE(ideals_equal(ideal_product(ideal({"x0"}, 2), HomogeneousIdeal::unit(3, kField)), ideal({"x0"}, 2)));
    EXPECT_THROW(ideal_sum(ideal({"x0"}, 2), ideal({"x0"}, 3)), InputError);
}

TEST(Saturate, Examples) {
    EXPECT_TRUE(ideals_equal(saturate(ideal({"x0^2", "x0*x1"}, 2), ideal({"x1"}, 2)), ideal({"x0"}, 2)));
    EXPECT_TRUE(groebner_basis(saturate(ideal({"x0"}, 2), ideal({"x0"}, 2))).is_unit());
    const auto i = ideal({"x0", "x1"}, 2);
    EXPECT_TRUE(groebner_basis(saturate(i, i)).is_unit());
}

TEST(Saturate, IrrelevantComponentRemoved) {
    // (x0^2, x0 x1, x0 x2) = (x0) n (x0, x1, x2)^2
    const auto sat = saturate(ideal({"x0^2", "x0*x1", "x0*x2"}, 2), HomogeneousIdeal::irrelevant(3, kField));
    EXPECT_TRUE(ideals_equal(sat, ideal({"x0"}, 2)));
}

TEST(Saturate, IdempotentAndMonotone) {
    FieldRng rng(kField, 8);
    for (int trial = 0; trial < 8; ++trial) {
        const auto i = random_ideal(rng, 4, 2, 2);
        const auto j = random_ideal(rng, 4, 1, 1);
        const auto s = saturate(i, j);
        EXPECT_TRUE(ideal_contains(s, i));
        EXPECT_TRUE(ideals_equal(saturate(s, j), s));
    }
}

TEST(IdealIntersection, TwoLines) {
    const auto both = ideal_intersection(ideal({"x0"}, 2), ideal({"x1"}, 2));
    EXPECT_TRUE(ideals_equal(both, ideal({"x0*x1"}, 2)));
}

TEST(DimDegree, Examples) {
    auto dd = dim_degree(ideal({"x0", "x1"}, 2));
    EXPECT_EQ(dd.dim, 0);
    EXPECT_EQ(dd.degree, 1);
    dd = dim_degree(ideal({"x0*x1"}, 2));
    EXPECT_EQ(dd.dim, 1);
    EXPECT_EQ(dd.degree, 2);
    dd = dim_degree(ideal({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, 3));
    EXPECT_EQ(dd.dim, 1);
    EXPECT_EQ(dd.degree, 3);
}

TEST(DimDegree, EmptyAndErrors) {
    EXPECT_TRUE(dim_degree(HomogeneousIdeal::irrelevant(4, kField)).empty());
    EXPECT_TRUE(dim_degree(HomogeneousIdeal::unit(4, kField)).empty());
    EXPECT_TRUE(dim_degree(ideal({"x0^2", "x1^3", "x2"}, 2)).empty());
    EXPECT_THROW(dim_degree(HomogeneousIdeal(3, kField)), InputError);
}

TEST(DimDegree, IgnoresEmbeddedIrrelevantComponent) {
    const auto dd = dim_degree(ideal({"x0^2", "x0*x1", "x0*x2"}, 2));
    EXPECT_EQ(dd.dim, 1);
    EXPECT_EQ(dd.degree, 1);
}

TEST(DimDegree, InvariantUnderLinearChange) {
    FieldRng rng(kField, 9);
    const std::vector<HomogeneousIdeal> ideals{
        ideal({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, 3),
        ideal({"x0*x1", "x0*x2"}, 3),
        ideal({"x0^2 + x1^2 + x2^2 + x3^2"}, 3),
        ideal({"x0", "x1^2"}, 3),
    };
    for (const auto& i : ideals) {
        const auto base = dim_degree(i);
        for (int k = 0; k < 10; ++k) {
            const auto moved = dim_degree(apply_linear_change(i, random_invertible_matrix(4, rng)));
            EXPECT_EQ(moved.dim, base.dim);
            EXPECT_EQ(moved.degree, base.degree);
        }
    }
}

TEST(IdealContains, Examples) {
    EXPECT_TRUE(ideal_contains(ideal({"x0", "x1"}, 3), ideal({"x1"}, 3)));
    EXPECT_FALSE(ideal_contains(ideal({"x0"}, 3), ideal({"x1"}, 3)));
    EXPECT_FALSE(ideal_contains(ideal({"x0^2"}, 3), ideal({"x0"}, 3)));
    EXPECT_THROW(ideal_contains(ideal({"x0"}, 3), ideal({"x0"}, 2)), InputError);
}

TEST(EliminationOrder, EliminatesLeadingBlock) {
    // eliminating x0 from (x0 x1 - x2^2, x0 - x2) leaves (x1 x2 - x2^2)
    HomogeneousIdeal i(3, kField, {poly("x0*x1 - x2^2", 2), poly("x0 - x2", 2)});
    const auto g = groebner_basis(i, MonomialOrder::elimination(1));
    HomogeneousIdeal eliminated(3, kField);
    for (const auto& p : g.generators()) {
        bool free = true;
        for (const auto& [e, c] : p.terms()) free = free && e[0] == 0;
        if (free) eliminated.add(p);
    }
    EXPECT_TRUE(ideals_equal(eliminated, ideal({"x1*x2 - x2^2"}, 2)));
}
