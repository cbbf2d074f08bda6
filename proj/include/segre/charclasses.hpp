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

#ifndef SEGRE_CHARCLASSES_HPP
#define SEGRE_CHARCLASSES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chow.hpp"
#include "polynomial.hpp"
#include "segre.hpp"

namespace segre {

/// Default bound on the number of generators fed to inclusion-exclusion
/// (2^k - 1 hypersurface evaluations).
inline constexpr std::size_t kDefaultMaxGenerators = 12;

/// Integer combination sum a_i 1_{V(F_i)} of indicator functions of
/// hypersurfaces in P^n.
class ConstructibleFunction {
   public:
    struct Term {
        Integer coefficient;
        SparsePolynomial hypersurface;
    };

    ConstructibleFunction(std::size_t n, PrimeField field) : n_(n), field_(field) {}

    void add(Integer coefficient, SparsePolynomial f) {
        if (f.num_vars() != n_ + 1 || !(f.field() == field_)) throw InputError("hypersurface from a different ring");
        if (f.is_zero()) throw InputError("constructible function: zero polynomial is not a hypersurface");
        if (!f.is_homogeneous()) throw InputError("constructible function: inhomogeneous hypersurface " + f.to_string());
        terms_.push_back({std::move(coefficient), std::move(f)});
    }

    std::size_t ambient_dim() const noexcept { return n_; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

   private:
    std::size_t n_;
    PrimeField field_;
    std::vector<Term> terms_;
};

/// Singularity subscheme of V(F): the partials together with F.
inline HomogeneousIdeal singularity_subscheme(const SparsePolynomial& f) { return jacobian_ideal(f); }

/// CSM class of the hypersurface V(F) from the Segre class of its
/// singularity subscheme:
///   c(TP^n) . ( s(D) + (1 + dH)^{-1} (s(JD)^dual (x) O(dH)) ).
inline ChowClass csm_hypersurface(const SparsePolynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw InputError("csm_hypersurface: zero polynomial");
    const std::size_t n = f.num_vars() - 1;
    const long long d = f.degree();
    if (d == 0) return ChowClass(n);  // nonzero constant: empty hypersurface
    const ChowClass s_d = cartier_segre(n, d);
    const ChowClass s_jd = segre_class(singularity_subscheme(f), seed);
    return cap_tangent(s_d + line_series(twist(dual(s_jd), d), d, -1));
}

/// CSM class of the support of V(I) by inclusion-exclusion over the
/// generators: sum over nonempty subsets S of (-1)^{|S|+1} csm(V(prod_S f_j)).
inline ChowClass csm(const HomogeneousIdeal& ideal, std::uint64_t seed,
                     std::size_t max_generators = kDefaultMaxGenerators) {
    if (ideal.empty()) throw InputError("csm: zero ideal");
    const auto& gens = ideal.generators();
    const std::size_t k = gens.size();
    if (k > max_generators)
        throw InputError("csm: " + std::to_string(k) + " generators exceed the inclusion-exclusion limit of " +
                         std::to_string(max_generators));
    ChowClass total(ideal.ambient_dim());
    for (const auto& g : gens)
        if (g.degree() == 0) return total;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        SparsePolynomial product = SparsePolynomial::constant(ideal.num_vars(), ideal.field(), 1);
        int bits = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) {
                product *= gens[j];
                ++bits;
            }
        const ChowClass c = csm_hypersurface(product, seed);
        if (bits % 2)
            total += c;
        else
            total -= c;
    }
    return total;
}

/// Linear extension of csm_hypersurface.
inline ChowClass csm_constructible(const ConstructibleFunction& phi, std::uint64_t seed) {
    ChowClass total(phi.ambient_dim());
    for (const auto& t : phi.terms()) total += t.coefficient * csm_hypersurface(t.hypersurface, seed);
    return total;
}

/// c(TP^n) . s(X, P^n).
inline ChowClass chern_fulton(const HomogeneousIdeal& ideal, std::uint64_t seed) {
    return cap_tangent(segre_class(ideal, seed));
}

/// c_SM(X) - c_F(X).
inline ChowClass milnor(const HomogeneousIdeal& ideal, std::uint64_t seed,
                        std::size_t max_generators = kDefaultMaxGenerators) {
    return csm(ideal, seed, max_generators) - chern_fulton(ideal, seed);
}

}  // namespace segre

#endif  // SEGRE_CHARCLASSES_HPP
