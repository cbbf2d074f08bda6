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

#include <gtest/gtest.h>

#include "segre/groebner.hpp"
#include "segre/linalg.hpp"
#include "segre/polynomial.hpp"
#include "support.hpp"

using namespace segre;
using segre::testing::ideal;
using segre::testing::kField;
using segre::testing::poly;

namespace {

SparsePolynomial random_poly(FieldRng& rng, std::size_t nv, std::uint32_t max_deg, std::size_t terms) {
    SparsePolynomial p(nv, rng.field());
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(nv, 0);
        std::uint32_t budget = static_cast<std::uint32_t>(rng.raw() % (max_deg + 1));
        while (budget--) ++e[rng.raw() % nv];
        p.add_term(e, rng.element());
    }
    return p;
}

}  // namespace

TEST(ParsePolynomial, QuadricCone) {
    const auto f = poly("x3^2+x4^2+x5^2", 5);
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(f.num_vars(), 6u);
    EXPECT_EQ(f.degree(), 2);
    EXPECT_TRUE(f.is_homogeneous());
}

TEST(ParsePolynomial, CancellationGivesZero) {
    EXPECT_TRUE(poly("x0*x1 - x0*x1", 3).is_zero());
    EXPECT_EQ(poly("x0*x1 - x0*x1", 3).degree(), -1);
}

TEST(ParsePolynomial, ExpansionModSeven) {
    const PrimeField f7(7);
    const auto f = parse_polynomial("x0^2 + 2*x0*x1 + x1^2", 2, f7);
    const SparsePolynomial::Terms expected{{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}};
    EXPECT_EQ(f.terms(), expected);
    EXPECT_EQ(parse_polynomial("(x0+x1)^2", 2, f7), f);
}

TEST(ParsePolynomial, ReducesCoefficients) {
    const PrimeField f7(7);
    EXPECT_TRUE(parse_polynomial("7*x0", 2, f7).is_zero());
    EXPECT_EQ(parse_polynomial("-1*x0", 2, f7), parse_polynomial("6*x0", 2, f7));
    EXPECT_EQ(parse_polynomial("-(x0 - x1)", 2, f7), parse_polynomial("x1 - x0", 2, f7));
}

TEST(ParsePolynomial, Errors) {
    EXPECT_THROW(poly("x4", 3), InputError);
    EXPECT_THROW(poly("x0 +", 3), InputError);
    EXPECT_THROW(poly("x0 ** x1", 3), InputError);
    EXPECT_THROW(poly("(x0 + x1", 3), InputError);
    EXPECT_THROW(poly("y0", 3), InputError);
    EXPECT_THROW(poly("", 3), InputError);
    try {
        poly("x0 + $", 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 6u);
    }
}

TEST(ParsePolynomial, ExponentOverflow) {
    const auto f = poly("x0^4000000000", 1);
    EXPECT_THROW(f * f, InputError);
}

TEST(SparsePolynomial, RoundTripThroughText) {
    FieldRng rng(kField, 5);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_poly(rng, 4, 4, 6);
        EXPECT_EQ(parse_polynomial(p.to_string(), 3, kField), p) << p.to_string();
    }
}

TEST(SparsePolynomial, RingAxioms) {
    FieldRng rng(kField, 17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nv = 1 + rng.raw() % 7;
        const auto a = random_poly(rng, nv, 4, 4), b = random_poly(rng, nv, 4, 4), c = random_poly(rng, nv, 4, 4);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(SparsePolynomial, HomogeneityPreserved) {
    FieldRng rng(kField, 23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_form(4, 1 + rng.raw() % 3, rng), g = random_form(4, 1 + rng.raw() % 3, rng);
        EXPECT_TRUE((f * g).is_homogeneous());
        EXPECT_TRUE(f.pow(3).is_homogeneous());
        for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(f.derivative(i).is_homogeneous());
    }
}

TEST(JacobianIdeal, Node) {
    const auto j = jacobian_ideal(poly("x0*x1", 2));
    ASSERT_EQ(j.generators().size(), 3u);
    EXPECT_EQ(j.generators()[0], poly("x1", 2));
    EXPECT_EQ(j.generators()[1], poly("x0", 2));
    EXPECT_EQ(j.generators()[2], poly("x0*x1", 2));
    EXPECT_TRUE(ideals_equal(j, ideal({"x0", "x1"}, 2)));
}

TEST(JacobianIdeal, ConeVertex) {
    const auto j = jacobian_ideal(poly("x1^2+x2^2+x3^2", 3));
    EXPECT_TRUE(ideals_equal(j, ideal({"x1", "x2", "x3"}, 3)));
    const auto dd = dim_degree(j);
    EXPECT_EQ(dd.dim, 0);
    EXPECT_EQ(dd.degree, 1);
}

TEST(JacobianIdeal, SmoothConicIsEmpty) {
    const auto j = jacobian_ideal(poly("x0^2+x1^2+x2^2", 2));
    EXPECT_TRUE(ideals_equal(j, HomogeneousIdeal::irrelevant(3, kField)));
    EXPECT_TRUE(dim_degree(j).empty());
}

TEST(JacobianIdeal, RejectsZero) { EXPECT_THROW(jacobian_ideal(SparsePolynomial(3, kField)), InputError); }

TEST(JacobianIdeal, LeibnizContainment) {
    FieldRng rng(kField, 31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_form(4, 1 + rng.raw() % 2, rng), g = random_form(4, 1 + rng.raw() % 2, rng);
        const HomogeneousIdeal rhs =
            ideal_sum(ideal_product(HomogeneousIdeal(4, kField, {f}), jacobian_ideal(g)),
                      ideal_product(HomogeneousIdeal(4, kField, {g}), jacobian_ideal(f)));
        EXPECT_TRUE(ideal_contains(rhs, jacobian_ideal(f * g)));
    }
}

TEST(HomogeneousIdeal, DropsZeroAndRejectsInhomogeneous) {
    HomogeneousIdeal i(3, kField);
    i.add(poly("x0 - x0", 2));
    EXPECT_TRUE(i.empty());
    EXPECT_THROW(i.add(poly("x0 + x1^2", 2)), InputError);
    EXPECT_THROW(i.add(poly("x0", 3)), InputError);
}

TEST(RandomLinearForms, EmptyAndDeterministic) {
    EXPECT_TRUE(random_linear_forms(0, 3, kField, 1).empty());
    EXPECT_EQ(random_linear_forms(4, 3, kField, 99), random_linear_forms(4, 3, kField, 99));
    EXPECT_NE(random_linear_forms(4, 3, kField, 99), random_linear_forms(4, 3, kField, 100));
}

TEST(RandomLinearForms, FirstFormsIndependent) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 3;
        const auto forms = random_linear_forms(n + 2, n, PrimeField(101), seed);
        ASSERT_EQ(forms.size(), n + 2);
        Matrix m;
        for (std::size_t r = 0; r <= n; ++r) {
            std::vector<std::uint32_t> row(n + 1, 0);
            for (const auto& [e, c] : forms[r].terms())
                for (std::size_t j = 0; j <= n; ++j)
                    if (e[j] == 1) row[j] = c;
            m.push_back(row);
        }
        EXPECT_EQ(matrix_rank(m, PrimeField(101)), n + 1);
        for (const auto& f : forms) EXPECT_EQ(f.degree(), 1);
    }
}

TEST(ApplyLinearChange, IdentityAndSwap) {
    const auto i = ideal({"x0*x1 + x2^2", "x1"}, 2);
    const auto same = apply_linear_change(i, identity_matrix(3));
    EXPECT_EQ(same.generators(), i.generators());
    Matrix swap = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    const auto swapped = apply_linear_change(ideal({"x0"}, 2), swap);
    EXPECT_EQ(swapped.generators()[0], poly("x1", 2));
}

TEST(ApplyLinearChange, InverseRestoresGenerators) {
    FieldRng rng(kField, 41);
    const auto i = ideal({"x0*x3 - x1*x2", "x0^3 + 5*x2*x3^2"}, 3);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = random_invertible_matrix(4, rng);
        const auto inv = matrix_inverse(m, kField);
        ASSERT_TRUE(inv.has_value());
        // x -> M x then x -> M^{-1} x composes to x -> M (M^{-1} x)
        const auto back = apply_linear_change(apply_linear_change(i, m), *inv);
        EXPECT_EQ(back.generators(), i.generators());
    }
}

TEST(ApplyLinearChange, RejectsSingular) {
    Matrix m = {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    EXPECT_THROW(apply_linear_change(ideal({"x0"}, 2), m), InputError);
}
