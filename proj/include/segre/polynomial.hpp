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

#ifndef SEGRE_POLYNOMIAL_HPP
#define SEGRE_POLYNOMIAL_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace segre {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial over F_p in variables x0..x{num_vars-1}.
/// Terms are kept in a map keyed by exponent tuple; zero coefficients are
/// never stored, so structural equality is mathematical equality.
class SparsePolynomial {
   public:
    using Terms = std::map<Exponents, std::uint32_t>;

    SparsePolynomial(std::size_t num_vars, PrimeField field) : num_vars_(num_vars), field_(field) {}

    static SparsePolynomial constant(std::size_t num_vars, PrimeField field, std::uint32_t c) {
        SparsePolynomial p(num_vars, field);
        p.add_term(Exponents(num_vars, 0), field.from_int(c));
        return p;
    }
    static SparsePolynomial variable(std::size_t num_vars, PrimeField field, std::size_t index) {
        if (index >= num_vars) throw InputError("variable index out of range");
        Exponents e(num_vars, 0);
        e[index] = 1;
        SparsePolynomial p(num_vars, field);
        p.add_term(std::move(e), 1);
        return p;
    }
    static SparsePolynomial monomial(PrimeField field, Exponents e, std::uint32_t c = 1) {
        SparsePolynomial p(e.size(), field);
        p.add_term(std::move(e), field.from_int(c));
        return p;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const PrimeField& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * x^e, removing the term if it cancels.
    void add_term(const Exponents& e, std::uint32_t c) {
        if (e.size() != num_vars_) throw InputError("exponent tuple has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Total degree; -1 for the zero polynomial.
    long long degree() const {
        long long d = -1;
        for (const auto& [e, c] : terms_) d = std::max<long long>(d, total(e));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = total(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total(e) != d) return false;
        return true;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
        return *this;
    }
    SparsePolynomial& scale(std::uint32_t s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = field_.mul(c, s);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator-(SparsePolynomial a) { return a.scale(a.field_.neg(1)); }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_ring(b);
        SparsePolynomial r(a.num_vars_, a.field_);
        Exponents e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
                r.add_term(e, a.field_.mul(ca, cb));
            }
        return r;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    SparsePolynomial pow(std::uint32_t k) const {
        SparsePolynomial r = constant(num_vars_, field_, 1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    /// d/dx_i.
    SparsePolynomial derivative(std::size_t i) const {
        if (i >= num_vars_) throw InputError("derivative: variable index out of range");
        SparsePolynomial r(num_vars_, field_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            --d[i];
            r.add_term(d, field_.mul(c, field_.from_int(e[i])));
        }
        return r;
    }

    /// Substitutes x_i -> images[i]; images share a (possibly different) ring.
    SparsePolynomial substitute(const std::vector<SparsePolynomial>& images) const {
        if (images.size() != num_vars_) throw InputError("substitute: need one image per variable");
        if (images.empty()) return *this;
        const std::size_t target_vars = images[0].num_vars_;
        SparsePolynomial result(target_vars, field_);
        std::vector<std::vector<SparsePolynomial>> powers(num_vars_);
        auto power = [&](std::size_t v, std::uint32_t k) -> const SparsePolynomial& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(constant(target_vars, field_, 1));
            while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
            return cache[k];
        };
        for (const auto& [e, c] : terms_) {
            SparsePolynomial t = constant(target_vars, field_, c);
            for (std::size_t v = 0; v < num_vars_; ++v)
                if (e[v]) t *= power(v, e[v]);
            result += t;
        }
        return result;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const std::int64_t sc = field_.to_signed(c);
            const std::int64_t mag = sc < 0 ? -sc : sc;
            out << (first ? (sc < 0 ? "-" : "") : (sc < 0 ? " - " : " + "));
            first = false;
            bool wrote = false;
            if (mag != 1 || total(e) == 0) {
                out << mag;
                wrote = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out << (wrote ? "*" : "") << "x" << i;
                if (e[i] > 1) out << "^" << e[i];
                wrote = true;
            }
        }
        return out.str();
    }

    static std::uint64_t total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

   private:
    static std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
        if (a > std::numeric_limits<std::uint32_t>::max() - b) throw InputError("monomial exponent overflow");
        return a + b;
    }
    void check_ring(const SparsePolynomial& o) const {
        if (o.num_vars_ != num_vars_ || !(o.field_ == field_)) throw InputError("polynomials from different rings");
    }

    std::size_t num_vars_;
    PrimeField field_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p) { return os << p.to_string(); }

/// Homogeneous ideal of F_p[x0..xn]; represents a closed subscheme of P^n.
class HomogeneousIdeal {
   public:
    HomogeneousIdeal(std::size_t num_vars, PrimeField field) : num_vars_(num_vars), field_(field) {}
    HomogeneousIdeal(std::size_t num_vars, PrimeField field, std::vector<SparsePolynomial> gens)
        : num_vars_(num_vars), field_(field) {
        for (auto& g : gens) add(std::move(g));
    }

    /// Drops zero generators; rejects inhomogeneous ones.
    void add(SparsePolynomial g) {
        if (g.num_vars() != num_vars_ || !(g.field() == field_)) throw InputError("generator from a different ring");
        if (g.is_zero()) return;
        if (!g.is_homogeneous()) throw InputError("inhomogeneous generator: " + g.to_string());
        gens_.push_back(std::move(g));
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t ambient_dim() const noexcept { return num_vars_ - 1; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<SparsePolynomial>& generators() const noexcept { return gens_; }
    bool empty() const noexcept { return gens_.empty(); }

    bool same_ring(const HomogeneousIdeal& o) const { return o.num_vars_ == num_vars_ && o.field_ == field_; }
    void check_ring(const HomogeneousIdeal& o) const {
        if (!same_ring(o)) throw InputError("ideals from different rings");
    }

    /// The unit ideal (1).
    static HomogeneousIdeal unit(std::size_t num_vars, PrimeField field) {
        return HomogeneousIdeal(num_vars, field, {SparsePolynomial::constant(num_vars, field, 1)});
    }
    /// The irrelevant ideal (x0, ..., xn).
    static HomogeneousIdeal irrelevant(std::size_t num_vars, PrimeField field) {
        HomogeneousIdeal r(num_vars, field);
        for (std::size_t i = 0; i < num_vars; ++i) r.add(SparsePolynomial::variable(num_vars, field, i));
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
        return s + ")";
    }

   private:
    std::size_t num_vars_;
    PrimeField field_;
    std::vector<SparsePolynomial> gens_;
};

/// Syntax error in a polynomial; column() is 1-based within the parsed text.
class ParseError : public InputError {
   public:
    ParseError(const std::string& msg, std::size_t column)
        : InputError("parse error at column " + std::to_string(column) + ": " + msg), message_(msg), column_(column) {}
    const std::string& message() const noexcept { return message_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::string message_;
    std::size_t column_;
};

namespace detail {

/// Recursive-descent parser for the grammar
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('-'|'+')? power
///   power  := atom ('^' integer)?
///   atom   := integer | 'x' digits | '(' expr ')'
class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, std::size_t num_vars, PrimeField field)
        : text_(text), num_vars_(num_vars), field_(field) {}

    SparsePolynomial parse() {
        skip_ws();
        if (pos_ >= text_.size()) fail("empty expression");
        SparsePolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_ + 1);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePolynomial expr() {
        SparsePolynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }
    SparsePolynomial term() {
        SparsePolynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }
    SparsePolynomial unary() {
        if (accept('-')) return -power();
        accept('+');
        return power();
    }
    SparsePolynomial power() {
        SparsePolynomial base = atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a nonnegative integer");
            std::uint64_t k = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                k = k * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
                if (k > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
            }
            return base.pow(static_cast<std::uint32_t>(k));
        }
        return base;
    }
    SparsePolynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePolynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.prime();
            return SparsePolynomial::constant(num_vars_, field_, static_cast<std::uint32_t>(v));
        }
        if (c == 'x') {
            const std::size_t start = pos_++;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("variable name must be x followed by an index");
            std::size_t idx = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
                if (idx > 1u << 20) break;
            }
            if (idx >= num_vars_) {
                pos_ = start;
                fail("unknown variable x" + std::to_string(idx) + " (ring has x0..x" + std::to_string(num_vars_ - 1) + ")");
            }
            return SparsePolynomial::variable(num_vars_, field_, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t num_vars_;
    PrimeField field_;
};

}  // namespace detail

/// Parses an expression in x0..xn (ring of P^n) with + - * ^ and integer
/// literals; coefficients are reduced mod p.
inline SparsePolynomial parse_polynomial(std::string_view text, std::size_t n, PrimeField field) {
    return detail::PolynomialParser(text, n + 1, field).parse();
}

/// (dF/dx0, ..., dF/dxn, F).
inline HomogeneousIdeal jacobian_ideal(const SparsePolynomial& f) {
    if (f.is_zero()) throw InputError("jacobian_ideal: zero polynomial");
    if (!f.is_homogeneous()) throw InputError("jacobian_ideal: polynomial is not homogeneous");
    HomogeneousIdeal j(f.num_vars(), f.field());
    for (std::size_t i = 0; i < f.num_vars(); ++i) j.add(f.derivative(i));
    j.add(f);
    return j;
}

/// `count` random linear forms in x0..xn, deterministic in (seed, p). The
/// first min(count, n+1) of them are linearly independent.
inline std::vector<SparsePolynomial> random_linear_forms(std::size_t count, std::size_t n, PrimeField field,
                                                         std::uint64_t seed) {
    const std::size_t vars = n + 1;
    for (std::uint64_t attempt = 0;; ++attempt) {
        FieldRng rng(field, mix_seed(seed, attempt));
        Matrix coeffs(count, std::vector<std::uint32_t>(vars));
        for (auto& row : coeffs)
            for (auto& v : row) v = rng.element();
        const std::size_t check = std::min(count, vars);
        Matrix head(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(check));
        if (matrix_rank(head, field) < check) continue;
        std::vector<SparsePolynomial> forms;
        forms.reserve(count);
        for (const auto& row : coeffs) {
            SparsePolynomial f(vars, field);
            for (std::size_t j = 0; j < vars; ++j) {
                Exponents e(vars, 0);
                e[j] = 1;
                f.add_term(e, row[j]);
            }
            forms.push_back(std::move(f));
        }
        return forms;
    }
}

/// Substitutes x_i -> sum_j M[i][j] x_j in every generator.
inline HomogeneousIdeal apply_linear_change(const HomogeneousIdeal& ideal, const Matrix& m) {
    const std::size_t vars = ideal.num_vars();
    const PrimeField& f = ideal.field();
    if (m.size() != vars) throw InputError("apply_linear_change: matrix has wrong size");
    for (const auto& row : m)
        if (row.size() != vars) throw InputError("apply_linear_change: matrix has wrong size");
    if (matrix_rank(m, f) < vars) throw InputError("apply_linear_change: singular matrix");
    std::vector<SparsePolynomial> images;
    for (std::size_t i = 0; i < vars; ++i) {
        SparsePolynomial img(vars, f);
        for (std::size_t j = 0; j < vars; ++j) {
            Exponents e(vars, 0);
            e[j] = 1;
            img.add_term(e, f.from_int(m[i][j]));
        }
        images.push_back(std::move(img));
    }
    HomogeneousIdeal out(vars, f);
    for (const auto& g : ideal.generators()) out.add(g.substitute(images));
    return out;
}

/// Random homogeneous form of degree d with every coefficient drawn.
inline SparsePolynomial random_form(std::size_t num_vars, std::uint32_t d, FieldRng& rng) {
    SparsePolynomial f(num_vars, rng.field());
    Exponents e(num_vars, 0);
    // enumerate exponent tuples of total degree d
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
        if (var + 1 == num_vars) {
            e[var] = left;
            f.add_term(e, rng.element());
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            e[var] = k;
            self(self, var + 1, left - k);
        }
    };
    if (num_vars == 0) return f;
    rec(rec, 0, d);
    return f;
}

}  // namespace segre

#endif  // SEGRE_POLYNOMIAL_HPP
