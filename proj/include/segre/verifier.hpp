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

#ifndef SEGRE_VERIFIER_HPP
#define SEGRE_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charclasses.hpp"
#include "chow.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"
#include "segre.hpp"

namespace segre {

/// Monte Carlo settings shared by every verification.
struct VerifyConfig {
    std::uint64_t seed = 0;
    /// Prime of the first trial; later trials derive their own. When unset
    /// the first trial keeps the field the inputs were given over.
    std::optional<std::uint32_t> prime;
    std::size_t trials = 3;
    std::size_t max_generators = kDefaultMaxGenerators;
};

/// Both sides of an identity in A_*P^n and how they compare.
struct VerificationReport {
    std::string identity;
    ChowClass lhs;
    ChowClass rhs;
    bool pass = false;
    /// Set when independent (prime, seed) trials disagreed.
    bool inconclusive = false;
    ChowClass discrepancy;  // rhs - lhs
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string notes;

    VerificationReport(std::string name, ChowClass l, ChowClass r, std::uint32_t p, std::uint64_t s,
                       std::string note = {})
        : identity(std::move(name)),
          lhs(std::move(l)),
          rhs(std::move(r)),
          discrepancy(rhs - lhs),
          prime(p),
          seed(s),
          notes(std::move(note)) {
        pass = discrepancy.is_zero();
    }
};

// ---------------------------------------------------------------------------
// Moving inputs between prime fields

/// Reinterprets the coefficients (symmetric representatives) modulo a new
/// prime. Exact for inputs whose integer coefficients are small.
inline SparsePolynomial rebase(const SparsePolynomial& f, const PrimeField& field) {
    SparsePolynomial out(f.num_vars(), field);
    for (const auto& [e, c] : f.terms()) out.add_term(e, field.from_int(f.field().to_signed(c)));
    return out;
}

inline HomogeneousIdeal rebase(const HomogeneousIdeal& ideal, const PrimeField& field) {
    HomogeneousIdeal out(ideal.num_vars(), field);
    for (const auto& g : ideal.generators()) out.add(rebase(g, field));
    return out;
}

inline ConstructibleFunction rebase(const ConstructibleFunction& phi, const PrimeField& field) {
    ConstructibleFunction out(phi.ambient_dim(), field);
    for (const auto& t : phi.terms()) out.add(t.coefficient, rebase(t.hypersurface, field));
    return out;
}

/// (prime, seed) of trial k.
inline std::pair<std::uint32_t, std::uint64_t> trial_parameters(const VerifyConfig& cfg, std::uint32_t input_prime,
                                                                std::size_t k) {
    if (k == 0) return {cfg.prime.value_or(input_prime), cfg.seed};
    const std::uint64_t s = mix_seed(cfg.seed, 0x7269616cull + k);
    return {random_prime(s), s};
}

/// Runs `trial(field, seed)` cfg.trials times with independent parameters.
/// Identical sides in every trial yield the first trial's report; any
/// difference marks it inconclusive.
inline VerificationReport run_trials(const VerifyConfig& cfg, std::uint32_t input_prime,
                                     const std::function<VerificationReport(const PrimeField&, std::uint64_t)>& trial) {
    const std::size_t count = std::max<std::size_t>(1, cfg.trials);
    std::optional<VerificationReport> first;
    for (std::size_t k = 0; k < count; ++k) {
        const auto [p, s] = trial_parameters(cfg, input_prime, k);
        VerificationReport r = trial(PrimeField(p), s);
        if (!first) {
            first = std::move(r);
            continue;
        }
        if (!(r.lhs == first->lhs) || !(r.rhs == first->rhs)) {
            first->inconclusive = true;
            first->notes += (first->notes.empty() ? "" : "; ") + std::string("trial ") + std::to_string(k) +
                            " (prime " + std::to_string(p) + ") disagreed: lhs " + r.lhs.to_text() + ", rhs " +
                            r.rhs.to_text();
        }
    }
    first->trials = count;
    return *first;
}

/// Vector-valued variant for checks that report several identities.
inline std::vector<VerificationReport> run_trials_multi(
    const VerifyConfig& cfg, std::uint32_t input_prime,
    const std::function<std::vector<VerificationReport>(const PrimeField&, std::uint64_t)>& trial) {
    const std::size_t count = std::max<std::size_t>(1, cfg.trials);
    std::vector<VerificationReport> first;
    for (std::size_t k = 0; k < count; ++k) {
        const auto [p, s] = trial_parameters(cfg, input_prime, k);
        auto reports = trial(PrimeField(p), s);
        if (k == 0) {
            first = std::move(reports);
            continue;
        }
        for (std::size_t i = 0; i < first.size(); ++i) {
            if (i >= reports.size() || !(reports[i].lhs == first[i].lhs) || !(reports[i].rhs == first[i].rhs)) {
                first[i].inconclusive = true;
                first[i].notes += (first[i].notes.empty() ? "" : "; ") + std::string("trial ") + std::to_string(k) +
                                  " (prime " + std::to_string(p) + ") disagreed";
            }
        }
    }
    for (auto& r : first) r.trials = count;
    return first;
}

// ---------------------------------------------------------------------------
// Identities

/// csm(X) . csm(Y) = c(TP^n) . csm(X n Y). Splayedness is the caller's
/// hypothesis; the identity is evaluated unconditionally.
inline VerificationReport verify_csm_product(const HomogeneousIdeal& x, const HomogeneousIdeal& y,
                                             const VerifyConfig& cfg) {
    x.check_ring(y);
    return run_trials(cfg, x.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto xi = rebase(x, f), yi = rebase(y, f);
        ChowClass lhs = intersect(csm(xi, seed, cfg.max_generators), csm(yi, seed, cfg.max_generators));
        ChowClass rhs = cap_tangent(csm(ideal_sum(xi, yi), seed, cfg.max_generators));
        return VerificationReport("csm-product", std::move(lhs), std::move(rhs), f.prime(), seed);
    });
}

/// csm(phi) . csm(psi) = c(TP^n) . csm(phi psi), with
/// 1_{V(F)} 1_{V(G)} = 1_{V(F, G)}.
inline VerificationReport verify_constructible_product(const ConstructibleFunction& phi,
                                                       const ConstructibleFunction& psi, const VerifyConfig& cfg) {
    if (phi.ambient_dim() != psi.ambient_dim() || !(phi.field() == psi.field()))
        throw InputError("constructible functions from different rings");
    return run_trials(cfg, phi.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto a = rebase(phi, f), b = rebase(psi, f);
        const std::size_t n = a.ambient_dim();
        ChowClass lhs = intersect(csm_constructible(a, seed), csm_constructible(b, seed));
        ChowClass product(n);
        for (const auto& ta : a.terms())
            for (const auto& tb : b.terms()) {
                HomogeneousIdeal both(n + 1, f, {ta.hypersurface, tb.hypersurface});
                product += (ta.coefficient * tb.coefficient) * csm(both, seed, cfg.max_generators);
            }
        return VerificationReport("constructible-product", std::move(lhs), cap_tangent(product), f.prime(), seed);
    });
}

/// c_F(X) . c_F(Y) = c(TP^n) . c_F(X n Y).
inline VerificationReport verify_fulton_product(const HomogeneousIdeal& x, const HomogeneousIdeal& y,
                                                const VerifyConfig& cfg) {
    x.check_ring(y);
    return run_trials(cfg, x.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto xi = rebase(x, f), yi = rebase(y, f);
        ChowClass lhs = intersect(chern_fulton(xi, seed), chern_fulton(yi, seed));
        ChowClass rhs = cap_tangent(chern_fulton(ideal_sum(xi, yi), seed));
        return VerificationReport("fulton-product", std::move(lhs), std::move(rhs), f.prime(), seed);
    });
}

namespace detail {

/// An ideal with no generators stands for the empty subscheme here.
inline bool is_empty_sentinel(const HomogeneousIdeal& z) { return z.empty(); }

inline ChowClass segre_or_zero(const HomogeneousIdeal& z, std::uint64_t seed) {
    if (is_empty_sentinel(z)) return ChowClass(z.ambient_dim());
    return segre_class(z, seed);
}

/// (s_hat(Z) (x) O(dH)) / (1 + dH).
inline ChowClass twisted_shat(const ChowClass& segre, long long d) {
    return line_series(twist(s_hat(segre), d), d, -1);
}

}  // namespace detail

/// Segre-class relation for Z_i contained in hypersurfaces D_i = V(F_i), with
/// W defined by I_W = (F_1) I_{Z_2} + (F_2) I_{Z_1}:
///   (s_hat(W) (x) O(D1+D2)) / (1+D1+D2)
///     = (s_hat(Z1) (x) O(D1))/(1+D1) . (s_hat(Z2) (x) O(D2))/(1+D2).
/// An ideal with no generators denotes the empty subscheme (I = (1)).
inline VerificationReport verify_segre_relation(const SparsePolynomial& d1, const HomogeneousIdeal& z1,
                                                const SparsePolynomial& d2, const HomogeneousIdeal& z2,
                                                const VerifyConfig& cfg) {
    z1.check_ring(z2);
    for (const auto* d : {&d1, &d2})
        if (d->is_zero() || !d->is_homogeneous() || d->degree() < 1 || d->num_vars() != z1.num_vars())
            throw InputError("segre-relation: D_i must be nonconstant homogeneous polynomials in the ring of Z_i");
    const std::size_t nv = z1.num_vars();
    auto check_contained = [&](const HomogeneousIdeal& z, const SparsePolynomial& d, const char* which) {
        if (detail::is_empty_sentinel(z)) return;
        if (!ideal_contains(z, HomogeneousIdeal(nv, z.field(), {d})))
            throw InputError(std::string("segre-relation: ") + which + " is not contained in its hypersurface");
    };
    check_contained(z1, d1, "Z1");
    check_contained(z2, d2, "Z2");

    return run_trials(cfg, z1.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto f1 = rebase(d1, f), f2 = rebase(d2, f);
        const auto zi1 = rebase(z1, f), zi2 = rebase(z2, f);
        const auto unit = HomogeneousIdeal::unit(nv, f);
        const HomogeneousIdeal& i1 = detail::is_empty_sentinel(zi1) ? unit : zi1;
        const HomogeneousIdeal& i2 = detail::is_empty_sentinel(zi2) ? unit : zi2;
        const HomogeneousIdeal w = ideal_sum(ideal_product(HomogeneousIdeal(nv, f, {f1}), i2),
                                             ideal_product(HomogeneousIdeal(nv, f, {f2}), i1));
        const long long e1 = f1.degree(), e2 = f2.degree();
        ChowClass lhs = detail::twisted_shat(segre_class(w, seed), e1 + e2);
        ChowClass rhs = intersect(detail::twisted_shat(detail::segre_or_zero(zi1, seed), e1),
                                  detail::twisted_shat(detail::segre_or_zero(zi2, seed), e2));
        return VerificationReport("segre-relation", std::move(lhs), std::move(rhs), f.prime(), seed);
    });
}

/// s(Z1 n Z2) = s(Z1) . s(Z2), compared after push-forward to P^n.
inline VerificationReport verify_segre_multiplicativity(const HomogeneousIdeal& z1, const HomogeneousIdeal& z2,
                                                        const VerifyConfig& cfg) {
    z1.check_ring(z2);
    return run_trials(cfg, z1.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto a = rebase(z1, f), b = rebase(z2, f);
        ChowClass lhs = segre_class(ideal_sum(a, b), seed);
        ChowClass rhs = intersect(segre_class(a, seed), segre_class(b, seed));
        return VerificationReport("segre-multiplicativity", std::move(lhs), std::move(rhs), f.prime(), seed,
                                  "compared in A_*P^n only");
    });
}

/// Total Chern class of a smooth degree-e hypersurface pushed to P^n:
/// (1+H)^{n+1} / (1+eH) . eH.
inline ChowClass smooth_hypersurface_chern(std::size_t n, long long e) {
    return line_series(line_series(ChowClass::linear(n, n - 1, e), 1, static_cast<long long>(n) + 1), e, -1);
}

namespace detail {

/// Random degree-e form that is nonsingular and cuts V(I) properly.
inline SparsePolynomial draw_general_divisor(const HomogeneousIdeal& y, long long e, std::uint64_t seed) {
    const std::size_t nv = y.num_vars();
    const DimDegree ydim = dim_degree(y);
    for (int attempt = 0; attempt < kMaxGenericityAttempts; ++attempt) {
        FieldRng rng(y.field(), mix_seed(seed, 0x62657274ull + static_cast<std::uint64_t>(attempt)));
        SparsePolynomial x = random_form(nv, static_cast<std::uint32_t>(e), rng);
        if (x.is_zero() || !dim_degree(jacobian_ideal(x)).empty()) continue;
        if (!ydim.empty()) {
            const DimDegree cut = dim_degree(ideal_sum(y, HomogeneousIdeal(nv, y.field(), {x})));
            if (!cut.empty() && *cut.dim >= *ydim.dim) continue;
        }
        return x;
    }
    throw GenericityError("bertini: no general divisor found after " + std::to_string(kMaxGenericityAttempts) +
                          " draws");
}

}  // namespace detail

/// For a general degree-e hypersurface X:
///   c(X) . csm(Y) = c(TP^n) . csm(X n Y)
///   c(X) . c_F(Y) = c(TP^n) . c_F(X n Y)
/// and, for e = 1, csm(X n Y) = X/(1+X) . csm(Y).
inline std::vector<VerificationReport> verify_bertini(long long e, const HomogeneousIdeal& y, const VerifyConfig& cfg) {
    if (e < 1) throw InputError("bertini: degree must be at least 1");
    return run_trials_multi(cfg, y.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto yi = rebase(y, f);
        const std::size_t n = yi.ambient_dim();
        const SparsePolynomial x = detail::draw_general_divisor(yi, e, seed);
        const HomogeneousIdeal xy = ideal_sum(yi, HomogeneousIdeal(n + 1, f, {x}));
        const ChowClass cx = smooth_hypersurface_chern(n, e);
        const ChowClass csm_y = csm(yi, seed, cfg.max_generators);
        const ChowClass csm_xy = csm(xy, seed, cfg.max_generators);
        std::vector<VerificationReport> out;
        out.emplace_back("bertini-csm", intersect(cx, csm_y), cap_tangent(csm_xy), f.prime(), seed);
        out.emplace_back("bertini-fulton", intersect(cx, chern_fulton(yi, seed)), cap_tangent(chern_fulton(xy, seed)),
                         f.prime(), seed);
        if (e == 1)
            out.emplace_back("hyperplane-section", csm_xy, intersect(cartier_segre(n, 1), csm_y), f.prime(), seed);
        return out;
    });
}

/// c(TP^n) . csm(P^n \ D) = csm(P^n \ D1) . csm(P^n \ D2) for D = D1 u D2.
inline VerificationReport verify_complement(const SparsePolynomial& f1, const SparsePolynomial& f2,
                                            const VerifyConfig& cfg) {
    for (const auto* f : {&f1, &f2})
        if (f->is_zero() || !f->is_homogeneous()) throw InputError("complement: need nonzero homogeneous polynomials");
    if (f1.num_vars() != f2.num_vars() || !(f1.field() == f2.field()))
        throw InputError("complement: polynomials from different rings");
    return run_trials(cfg, f1.field().prime(), [&](const PrimeField& f, std::uint64_t seed) {
        const auto a = rebase(f1, f), b = rebase(f2, f);
        const ChowClass whole = cap_tangent(ChowClass::fundamental(a.num_vars() - 1));
        const ChowClass open1 = whole - csm_hypersurface(a, seed);
        const ChowClass open2 = whole - csm_hypersurface(b, seed);
        const ChowClass open12 = whole - csm_hypersurface(a * b, seed);
        return VerificationReport("complement", cap_tangent(open12), intersect(open1, open2), f.prime(), seed);
    });
}

/// Outcome of the Jacobian-ideal splayedness proxy.
struct SplayedTestReport {
    bool equal = false;
    /// I_JD is contained in (F1) I_JD2 + (F2) I_JD1; holds by the Leibniz rule.
    bool containment = false;
    std::vector<SparsePolynomial> jacobian_basis;
    std::vector<SparsePolynomial> leibniz_basis;
    std::string note = "algebraic proxy for splayedness (Jacobian ideal comparison), not a decision procedure";
};

/// Compares I_JD for D = V(F1 F2) with (F1) I_JD2 + (F2) I_JD1 after
/// saturation by (x0..xn).
inline SplayedTestReport jacobian_splayed_test(const SparsePolynomial& f1, const SparsePolynomial& f2) {
    for (const auto* f : {&f1, &f2})
        if (f->is_zero() || !f->is_homogeneous() || f->degree() < 1)
            throw InputError("splayed test: need nonconstant homogeneous polynomials");
    if (f1.num_vars() != f2.num_vars() || !(f1.field() == f2.field()))
        throw InputError("splayed test: polynomials from different rings");
    const std::size_t nv = f1.num_vars();
    const PrimeField field = f1.field();
    const DimDegree common = dim_degree(HomogeneousIdeal(nv, field, {f1, f2}));
    if (!common.empty() && *common.dim >= static_cast<int>(nv) - 2)
        throw InputError("splayed test: F1 and F2 share a common factor");

    const HomogeneousIdeal jd = jacobian_ideal(f1 * f2);
    const HomogeneousIdeal leibniz = ideal_sum(ideal_product(HomogeneousIdeal(nv, field, {f1}), jacobian_ideal(f2)),
                                               ideal_product(HomogeneousIdeal(nv, field, {f2}), jacobian_ideal(f1)));
    const HomogeneousIdeal irrelevant = HomogeneousIdeal::irrelevant(nv, field);
    const HomogeneousIdeal jd_sat = saturate(jd, irrelevant);
    const HomogeneousIdeal leibniz_sat = saturate(leibniz, irrelevant);

    SplayedTestReport out;
    out.containment = ideal_contains(leibniz, jd);
    if (!out.containment) throw std::logic_error("Leibniz containment failed; arithmetic error");
    out.equal = ideals_equal(jd_sat, leibniz_sat);
    out.jacobian_basis = groebner_basis(jd_sat).generators();
    out.leibniz_basis = groebner_basis(leibniz_sat).generators();
    return out;
}

/// Euler characteristic identity for surfaces V(F), V(G) in P^3 of degrees
/// d, e whose general hyperplane sections have Euler characteristics a, b:
///   chi(V(F, G)) = e a + d b - 2 d e.
/// Both sides are reported as multiples of [P^0].
inline VerificationReport euler_surface_identity(const SparsePolynomial& f, const SparsePolynomial& g,
                                                 const VerifyConfig& cfg) {
    for (const auto* p : {&f, &g})
        if (p->is_zero() || !p->is_homogeneous() || p->degree() < 1 || p->num_vars() != 4)
            throw InputError("euler-surface: need nonconstant homogeneous polynomials in x0..x3");
    if (!(f.field() == g.field())) throw InputError("euler-surface: polynomials from different rings");
    return run_trials(cfg, f.field().prime(), [&](const PrimeField& fld, std::uint64_t seed) {
        const auto a_poly = rebase(f, fld), b_poly = rebase(g, fld);
        const long long d = a_poly.degree(), e = b_poly.degree();
        const ChowClass section = cartier_segre(3, 1);
        const Integer a = euler_char(intersect(section, csm_hypersurface(a_poly, seed)));
        const Integer b = euler_char(intersect(section, csm_hypersurface(b_poly, seed)));
        const Integer chi = euler_char(csm(HomogeneousIdeal(4, fld, {a_poly, b_poly}), seed, cfg.max_generators));
        const Integer predicted = e * a + d * b - 2 * d * e;
        return VerificationReport("euler-surface", ChowClass::linear(3, 0, chi), ChowClass::linear(3, 0, predicted),
                                  fld.prime(), seed,
                                  "a = " + a.str() + ", b = " + b.str() + ", d = " + std::to_string(d) +
                                      ", e = " + std::to_string(e));
    });
}

}  // namespace segre

#endif  // SEGRE_VERIFIER_HPP
