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

#ifndef SEGRE_GROEBNER_HPP
#define SEGRE_GROEBNER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "polynomial.hpp"

namespace segre {

/// Monomial order tag. Elimination orders compare the first `block`
/// variables by degrevlex and break ties with degrevlex on the rest.
struct MonomialOrder {
    enum class Kind { DegRevLex, Elimination };
    Kind kind = Kind::DegRevLex;
    std::size_t block = 0;

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder elimination(std::size_t block) { return {Kind::Elimination, block}; }
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace gb {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector with cached total degree and a support mask used as
/// a cheap divisibility filter.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint32_t mask = 0;

    void refresh() noexcept {
        deg = 0;
        mask = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            deg += e[i];
            if (e[i]) mask |= 1u << i;
        }
    }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
};

inline bool divides(const Monomial& a, const Monomial& b) noexcept {
    if (a.mask & ~b.mask) return false;
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const std::uint32_t s = std::uint32_t{a.e[i]} + b.e[i];
        if (s > 0xFFFF) throw InputError("monomial exponent overflow");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    r.deg = a.deg + b.deg;
    r.mask = a.mask | b.mask;
    return r;
}

/// b / a, assuming a divides b.
inline Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    r.refresh();
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.refresh();
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.mask & b.mask) == 0; }

/// Polynomial ring context: variable count, coefficient field, term order.
struct Ring {
    std::size_t nvars = 0;
    PrimeField field;
    MonomialOrder order;

    Ring(std::size_t nvars_, PrimeField field_, MonomialOrder order_ = {})
        : nvars(nvars_), field(field_), order(order_) {
        if (nvars > kMaxVars) throw InputError("too many variables for the Groebner engine (max 16)");
    }

    /// Three-way comparison under the ring's order: <0, 0, >0.
    int compare(const Monomial& a, const Monomial& b) const noexcept {
        if (order.kind == MonomialOrder::Kind::Elimination && order.block > 0) {
            if (int c = revlex_block(a, b, 0, order.block); c != 0) return c;
            return revlex_block(a, b, order.block, nvars);
        }
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (std::size_t i = nvars; i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

   private:
    static int revlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

struct Term {
    Monomial m;
    std::uint32_t c;
};

/// Terms sorted strictly descending under the ring order; no zero coefficients.
using Poly = std::vector<Term>;

inline void sort_poly(const Ring& r, Poly& p) {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
}

/// Converts, placing sparse variable i at ring variable offset + i.
inline Poly from_sparse(const Ring& r, const SparsePolynomial& f, std::size_t offset = 0) {
    if (offset + f.num_vars() > r.nvars) throw InputError("polynomial does not fit the ring");
    Poly p;
    p.reserve(f.size());
    for (const auto& [exps, c] : f.terms()) {
        Term t{{}, c};
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0xFFFF) throw InputError("monomial exponent overflow");
            t.m.e[offset + i] = static_cast<std::uint16_t>(exps[i]);
        }
        t.m.refresh();
        p.push_back(t);
    }
    sort_poly(r, p);
    return p;
}

/// Inverse of from_sparse; variables outside [offset, offset+num_vars) must
/// not occur.
inline SparsePolynomial to_sparse(const Ring& r, const Poly& p, std::size_t num_vars, std::size_t offset = 0) {
    SparsePolynomial f(num_vars, r.field);
    Exponents e(num_vars);
    for (const auto& t : p) {
        for (std::size_t i = 0; i < num_vars; ++i) e[i] = t.m.e[offset + i];
        f.add_term(e, t.c);
    }
    return f;
}

inline void make_monic(const Ring& r, Poly& p) {
    if (p.empty() || p.front().c == 1) return;
    const auto inv = r.field.inv(p.front().c);
    for (auto& t : p) t.c = r.field.mul(t.c, inv);
}

inline Poly multiply(const Ring& r, const Poly& a, const Poly& b) {
    std::map<std::array<std::uint16_t, kMaxVars>, std::uint32_t> acc;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            auto m = mul(ta.m, tb.m);
            auto& slot = acc[m.e];
            slot = r.field.add(slot, r.field.mul(ta.c, tb.c));
        }
    Poly out;
    for (const auto& [e, c] : acc) {
        if (c == 0) continue;
        Term t{{}, c};
        t.m.e = e;
        t.m.refresh();
        out.push_back(t);
    }
    sort_poly(r, out);
    return out;
}

/// f - c * m * g, where the caller guarantees the leading terms cancel.
/// `skip` leading terms of f and g are dropped.
inline Poly sub_mul(const Ring& r, const Poly& f, std::size_t f_from, std::uint32_t c, const Monomial& m, const Poly& g,
                    std::size_t g_from) {
    Poly out;
    out.reserve(f.size() - f_from + g.size() - g_from);
    const PrimeField& fld = r.field;
    const std::uint32_t nc = fld.neg(c);
    std::size_t i = f_from, j = g_from;
    Monomial gm;
    bool have_gm = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !have_gm) {
            gm = mul(m, g[j].m);
            have_gm = true;
        }
        int cmp;
        if (i >= f.size())
            cmp = -1;
        else if (j >= g.size())
            cmp = 1;
        else
            cmp = r.compare(f[i].m, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, fld.mul(nc, g[j].c)});
            ++j;
            have_gm = false;
        } else {
            const auto v = fld.add(f[i].c, fld.mul(nc, g[j].c));
            if (v) out.push_back({f[i].m, v});
            ++i;
            ++j;
            have_gm = false;
        }
    }
    return out;
}

/// Basis element with bookkeeping for Buchberger.
struct Element {
    Poly poly;
    std::uint32_t sugar = 0;
    bool active = true;
};

/// Finds a basis element whose leading monomial divides m.
inline const Element* find_reducer(const std::vector<Element>& basis, const Monomial& m) {
    const Element* best = nullptr;
    for (const auto& el : basis) {
        if (!el.active) continue;
        if (divides(el.poly.front().m, m)) {
            if (!best || el.poly.size() < best->poly.size()) best = &el;
        }
    }
    return best;
}

/// Full reduction (every term) of f modulo the active elements of `basis`.
/// Updates `sugar` with the sugar of the multiples that were subtracted.
inline Poly reduce(const Ring& r, Poly f, const std::vector<Element>& basis, std::uint32_t* sugar = nullptr) {
    Poly done;
    std::size_t start = 0;
    while (start < f.size()) {
        const Term& lt = f[start];
        const Element* red = find_reducer(basis, lt.m);
        if (!red) {
            done.push_back(lt);
            ++start;
            continue;
        }
        const Poly& g = red->poly;
        const Monomial q = quotient(lt.m, g.front().m);
        const std::uint32_t c = r.field.mul(lt.c, r.field.inv(g.front().c));
        if (sugar) *sugar = std::max(*sugar, red->sugar + q.deg);
        f = sub_mul(r, f, start + 1, c, q, g, 1);
        start = 0;
    }
    return done;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
};

inline Poly spoly(const Ring& r, const Poly& a, const Poly& b, const Monomial& l) {
    // both monic
    const Monomial qa = quotient(l, a.front().m), qb = quotient(l, b.front().m);
    Poly sa;
    sa.reserve(a.size());
    for (std::size_t k = 1; k < a.size(); ++k) sa.push_back({mul(qa, a[k].m), a[k].c});
    return sub_mul(r, sa, 0, 1, qb, b, 1);
}

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// coprime-lcm and chain criteria, sugar selection, and a final
/// inter-reduction. Returns the reduced monic basis sorted by ascending
/// leading monomial.
inline std::vector<Poly> buchberger(const Ring& r, std::vector<Poly> input) {
    std::vector<Element> basis;
    std::vector<Pair> pairs;

    auto update = [&](Poly h, std::uint32_t sugar) {
        const std::size_t k = basis.size();
        const Monomial& lh = h.front().m;
        basis.push_back({std::move(h), sugar, true});
        // new candidate pairs
        std::vector<Pair> cand;
        for (std::size_t i = 0; i < k; ++i) {
            if (!basis[i].active) continue;
            const Monomial& li = basis[i].poly.front().m;
            Monomial l = lcm(li, lh);
            std::uint32_t s = std::max(basis[i].sugar + (l.deg - li.deg), basis[k].sugar + (l.deg - lh.deg));
            cand.push_back({i, k, l, s});
        }
        // chain criterion among the new pairs, keeping coprime pairs as witnesses
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const auto& p = cand[a];
            const bool cop = coprime(basis[p.i].poly.front().m, lh);
            bool drop = false;
            if (!cop) {
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (b == a) continue;
                    const auto& q = cand[b];
                    if (divides(q.lcm, p.lcm) && (!(q.lcm == p.lcm) || b < a)) drop = true;
                }
            }
            if (!drop) kept.push_back(p);
        }
        // old pairs made redundant by h
        std::vector<Pair> next;
        next.reserve(pairs.size() + kept.size());
        for (const auto& p : pairs) {
            if (divides(lh, p.lcm)) {
                Monomial l1 = lcm(basis[p.i].poly.front().m, lh);
                Monomial l2 = lcm(basis[p.j].poly.front().m, lh);
                if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
            }
            next.push_back(p);
        }
        for (const auto& p : kept)
            if (!coprime(basis[p.i].poly.front().m, lh)) next.push_back(p);
        pairs = std::move(next);
        for (std::size_t i = 0; i < k; ++i)
            if (basis[i].active && divides(lh, basis[i].poly.front().m)) basis[i].active = false;
    };

    for (auto& p : input) sort_poly(r, p);
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return a.size() > b.size();
        return r.compare(a.front().m, b.front().m) < 0;
    });
    for (auto& f : input) {
        if (f.empty()) continue;
        std::uint32_t sugar = 0;
        for (const auto& t : f) sugar = std::max(sugar, t.m.deg);
        Poly h = reduce(r, std::move(f), basis, &sugar);
        if (h.empty()) continue;
        make_monic(r, h);
        if (h.front().m.deg == 0) return {h};
        update(std::move(h), sugar);
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.sugar < b.sugar || (a.sugar == b.sugar && r.compare(a.lcm, b.lcm) < 0)) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        std::uint32_t sugar = p.sugar;
        Poly s = spoly(r, basis[p.i].poly, basis[p.j].poly, p.lcm);
        Poly h = reduce(r, std::move(s), basis, &sugar);
        if (h.empty()) continue;
        make_monic(r, h);
        if (h.front().m.deg == 0) return {h};
        update(std::move(h), sugar);
    }

    // minimal basis, then tail reduction
    std::vector<Poly> minimal;
    for (const auto& el : basis)
        if (el.active) minimal.push_back(el.poly);
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly& a, const Poly& b) { return r.compare(a.front().m, b.front().m) < 0; });
    std::vector<Poly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Element> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back({minimal[l], 0, true});
        Poly tail(minimal[k].begin() + 1, minimal[k].end());
        Poly red = reduce(r, std::move(tail), others);
        Poly full;
        full.reserve(red.size() + 1);
        full.push_back(minimal[k].front());
        full.insert(full.end(), red.begin(), red.end());
        reduced.push_back(std::move(full));
    }
    return reduced;
}

inline bool is_unit_basis(const std::vector<Poly>& g) { return g.size() == 1 && g[0].front().m.deg == 0; }

/// Normal form modulo a Groebner basis.
inline Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& g) {
    std::vector<Element> basis;
    basis.reserve(g.size());
    for (const auto& p : g) basis.push_back({p, 0, true});
    return reduce(r, f, basis);
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial ideals

/// Integer polynomial in t, lowest degree first.
using TPoly = std::vector<std::int64_t>;

inline void tpoly_add(TPoly& a, const TPoly& b, std::size_t shift = 0) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

inline void tpoly_trim(TPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

using MonomialKey = std::vector<std::array<std::uint16_t, kMaxVars>>;

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& o : out)
            if (divides(o, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of k[x]/(gens),
/// by the pivot recursion N(I) = N(I + p) + t^deg(p) N(I : p).
class HilbertNumerator {
   public:
    TPoly operator()(std::vector<Monomial> gens) { return compute(minimalize(std::move(gens))); }

   private:
    TPoly compute(const std::vector<Monomial>& gens) {
        if (gens.empty()) return {1};
        for (const auto& g : gens)
            if (g.deg == 0) return {};
        // pairwise coprime generators: product formula
        std::uint32_t seen = 0;
        bool coprime_all = true;
        for (const auto& g : gens) {
            if (g.mask & seen) {
                coprime_all = false;
                break;
            }
            seen |= g.mask;
        }
        if (coprime_all) {
            TPoly acc{1};
            for (const auto& g : gens) {
                TPoly next(acc.size() + g.deg, 0);
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    next[i] += acc[i];
                    next[i + g.deg] -= acc[i];
                }
                acc = std::move(next);
            }
            tpoly_trim(acc);
            return acc;
        }
        MonomialKey key;
        key.reserve(gens.size());
        for (const auto& g : gens) key.push_back(g.e);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        // pivot x^e: x occurs most often among mixed generators, e is the
        // median of its exponents there (always below any pure power of x)
        std::array<int, kMaxVars> count{};
        for (const auto& g : gens)
            if (std::popcount(g.mask) > 1)
                for (std::size_t v = 0; v < kMaxVars; ++v)
                    if (g.e[v]) ++count[v];
        std::size_t var = 0;
        for (std::size_t v = 1; v < kMaxVars; ++v)
            if (count[v] > count[var]) var = v;
        std::vector<std::uint16_t> exps;
        for (const auto& g : gens)
            if (std::popcount(g.mask) > 1 && g.e[var]) exps.push_back(g.e[var]);
        std::sort(exps.begin(), exps.end());
        Monomial pivot;
        pivot.e[var] = exps[exps.size() / 2];
        pivot.refresh();

        std::vector<Monomial> plus = gens;
        plus.push_back(pivot);
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& g : gens) {
            Monomial q = g;
            q.e[var] = static_cast<std::uint16_t>(g.e[var] > pivot.e[var] ? g.e[var] - pivot.e[var] : 0);
            q.refresh();
            colon.push_back(q);
        }
        TPoly result = compute(minimalize(std::move(plus)));
        tpoly_add(result, compute(minimalize(std::move(colon))), pivot.deg);
        tpoly_trim(result);
        cache_.emplace(std::move(key), result);
        return result;
    }

    std::map<MonomialKey, TPoly> cache_;
};

/// Krull dimension and multiplicity read off the Hilbert series of the
/// leading-term ideal. krull_dim < 0 encodes the unit ideal.
struct KrullData {
    int krull_dim;
    std::int64_t degree;
};

inline KrullData krull_data(const std::vector<Monomial>& leading, std::size_t nvars) {
    TPoly num = HilbertNumerator{}(leading);
    tpoly_trim(num);
    if (num.empty()) return {-1, 0};
    std::size_t divisions = 0;
    for (;;) {
        std::int64_t at_one = 0;
        for (auto c : num) at_one += c;
        if (at_one != 0 || divisions == nvars) {
            return {static_cast<int>(nvars - divisions), at_one};
        }
        // divide by (1 - t): q_i = sum_{j<=i} n_j
        TPoly q(num.size() - 1);
        std::int64_t run = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            run += num[i];
            q[i] = run;
        }
        num = std::move(q);
        ++divisions;
    }
}

}  // namespace gb

/// Reduced Groebner basis of an ideal together with its ring.
class GroebnerBasis {
   public:
    GroebnerBasis(gb::Ring ring, std::vector<gb::Poly> polys) : ring_(std::move(ring)), polys_(std::move(polys)) {}

    const gb::Ring& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_.order; }
    const std::vector<gb::Poly>& polys() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool is_unit() const { return gb::is_unit_basis(polys_); }

    std::vector<SparsePolynomial> generators() const {
        std::vector<SparsePolynomial> out;
        for (const auto& p : polys_) out.push_back(gb::to_sparse(ring_, p, ring_.nvars));
        return out;
    }
    std::vector<gb::Monomial> leading_monomials() const {
        std::vector<gb::Monomial> out;
        for (const auto& p : polys_) out.push_back(p.front().m);
        return out;
    }

   private:
    gb::Ring ring_;
    std::vector<gb::Poly> polys_;
};

inline GroebnerBasis groebner_basis(const HomogeneousIdeal& ideal, MonomialOrder order = MonomialOrder::degrevlex()) {
    gb::Ring r(ideal.num_vars(), ideal.field(), order);
    std::vector<gb::Poly> in;
    for (const auto& g : ideal.generators()) in.push_back(gb::from_sparse(r, g));
    return GroebnerBasis(r, gb::buchberger(r, std::move(in)));
}

inline SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& g) {
    const auto& r = g.ring();
    if (f.num_vars() != r.nvars || !(f.field() == r.field)) throw InputError("normal_form: ring mismatch");
    return gb::to_sparse(r, gb::normal_form(r, gb::from_sparse(r, f), g.polys()), r.nvars);
}

inline HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    a.check_ring(b);
    HomogeneousIdeal out = a;
    for (const auto& g : b.generators()) out.add(g);
    return out;
}

inline HomogeneousIdeal ideal_product(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    a.check_ring(b);
    HomogeneousIdeal out(a.num_vars(), a.field());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) out.add(f * g);
    return out;
}

/// True iff every generator of `ideal_d` lies in `ideal_z`, i.e. V(I_Z) is a
/// subscheme of V(I_D).
inline bool ideal_contains(const HomogeneousIdeal& ideal_z, const HomogeneousIdeal& ideal_d) {
    ideal_z.check_ring(ideal_d);
    const GroebnerBasis g = groebner_basis(ideal_z);
    for (const auto& f : ideal_d.generators())
        if (!normal_form(f, g).is_zero()) return false;
    return true;
}

/// Same ideal (as sets), decided by mutual containment.
inline bool ideals_equal(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

namespace detail {

inline HomogeneousIdeal from_basis(std::size_t num_vars, const PrimeField& field, const gb::Ring& r,
                                   const std::vector<gb::Poly>& polys, std::size_t offset) {
    HomogeneousIdeal out(num_vars, field);
    for (const auto& p : polys) {
        bool free_of_aux = true;
        for (const auto& t : p) {
            for (std::size_t v = 0; v < offset; ++v)
                if (t.m.e[v]) free_of_aux = false;
        }
        if (free_of_aux) out.add(gb::to_sparse(r, p, num_vars, offset));
    }
    return out;
}

}  // namespace detail

/// (I : f^inf) by adjoining t, adding 1 - t f, and eliminating t.
inline HomogeneousIdeal saturate_by(const HomogeneousIdeal& ideal, const SparsePolynomial& f) {
    const std::size_t nv = ideal.num_vars();
    gb::Ring r(nv + 1, ideal.field(), MonomialOrder::elimination(1));
    std::vector<gb::Poly> in;
    for (const auto& g : ideal.generators()) in.push_back(gb::from_sparse(r, g, 1));
    gb::Poly tf = gb::from_sparse(r, f, 1);
    gb::Poly aux;
    for (auto t : tf) {
        t.m.e[0] += 1;
        t.m.refresh();
        t.c = r.field.neg(t.c);
        aux.push_back(t);
    }
    aux.push_back({gb::Monomial{}, 1});
    gb::sort_poly(r, aux);
    in.push_back(std::move(aux));
    return detail::from_basis(nv, ideal.field(), r, gb::buchberger(r, std::move(in)), 1);
}

/// I intersect J via t I + (1 - t) J, eliminating t.
inline HomogeneousIdeal ideal_intersection(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    a.check_ring(b);
    const std::size_t nv = a.num_vars();
    gb::Ring r(nv + 1, a.field(), MonomialOrder::elimination(1));
    std::vector<gb::Poly> in;
    for (const auto& g : a.generators()) {
        gb::Poly p = gb::from_sparse(r, g, 1);
        for (auto& t : p) {
            t.m.e[0] += 1;
            t.m.refresh();
        }
        in.push_back(std::move(p));
    }
    for (const auto& g : b.generators()) {
        gb::Poly p = gb::from_sparse(r, g, 1);
        gb::Poly tp;
        for (auto t : p) {
            tp.push_back(t);
            t.m.e[0] += 1;
            t.m.refresh();
            t.c = r.field.neg(t.c);
            tp.push_back(t);
        }
        gb::sort_poly(r, tp);
        in.push_back(std::move(tp));
    }
    return detail::from_basis(nv, a.field(), r, gb::buchberger(r, std::move(in)), 1);
}

/// (I : J^inf) as the intersection over generators f of J of (I : f^inf).
inline HomogeneousIdeal saturate(const HomogeneousIdeal& ideal, const HomogeneousIdeal& by) {
    ideal.check_ring(by);
    if (by.empty()) return HomogeneousIdeal::unit(ideal.num_vars(), ideal.field());
    std::optional<HomogeneousIdeal> acc;
    for (const auto& f : by.generators()) {
        HomogeneousIdeal s = saturate_by(ideal, f);
        acc = acc ? ideal_intersection(*acc, s) : s;
    }
    return *acc;
}

/// Projective dimension (nullopt for the empty scheme) and degree.
struct DimDegree {
    std::optional<int> dim;
    std::int64_t degree = 0;
    bool empty() const noexcept { return !dim.has_value(); }
};

/// Dimension and degree of V(I) from the Hilbert polynomial of the
/// leading-term ideal. The Hilbert polynomial does not change under
/// saturation by (x0..xn), so no saturation is performed.
inline DimDegree dim_degree(const HomogeneousIdeal& ideal) {
    if (ideal.empty()) throw InputError("dim_degree: zero ideal");
    const GroebnerBasis g = groebner_basis(ideal);
    const auto kd = gb::krull_data(g.leading_monomials(), ideal.num_vars());
    if (kd.krull_dim <= 0) return {std::nullopt, 0};
    return {kd.krull_dim - 1, kd.degree};
}

}  // namespace segre

#endif  // SEGRE_GROEBNER_HPP
