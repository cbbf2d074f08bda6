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

#ifndef SEGRE_CHOW_HPP
#define SEGRE_CHOW_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"

namespace segre {

using Integer = boost::multiprecision::cpp_int;

/// An element of the Chow group of P^n, stored by dimension: coeffs()[i] is
/// the coefficient of the class [P^i] of an i-dimensional linear subspace.
/// Multiplication by the hyperplane class H lowers dimension by one, so the
/// codimension-k part lives at index n - k.
class ChowClass {
   public:
    explicit ChowClass(std::size_t ambient_dim) : coeffs_(ambient_dim + 1) {}

    /// Coefficients listed by dimension, index 0 = [P^0].
    ChowClass(std::size_t ambient_dim, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != ambient_dim + 1) throw InputError("ChowClass: need ambient_dim + 1 coefficients");
    }
    ChowClass(std::size_t ambient_dim, std::initializer_list<long long> coeffs) : coeffs_(ambient_dim + 1) {
        if (coeffs.size() != ambient_dim + 1) throw InputError("ChowClass: need ambient_dim + 1 coefficients");
        std::size_t i = 0;
        for (long long c : coeffs) coeffs_[i++] = c;
    }

    /// The fundamental class [P^n].
    static ChowClass fundamental(std::size_t n) {
        ChowClass c(n);
        c.coeffs_[n] = 1;
        return c;
    }
    /// c * [P^dim].
    static ChowClass linear(std::size_t n, std::size_t dim, const Integer& c = 1) {
        ChowClass r(n);
        if (dim > n) throw InputError("ChowClass::linear: dimension exceeds ambient");
        r.coeffs_[dim] = c;
        return r;
    }

    std::size_t ambient_dim() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t dim) const { return coeffs_.at(dim); }
    Integer& operator[](std::size_t dim) { return coeffs_.at(dim); }

    /// Coefficient of H^k, i.e. of [P^{n-k}].
    const Integer& codim(std::size_t k) const { return coeffs_.at(ambient_dim() - k); }
    Integer& codim(std::size_t k) { return coeffs_.at(ambient_dim() - k); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    ChowClass& operator+=(const ChowClass& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    ChowClass& operator-=(const ChowClass& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    ChowClass& operator*=(const Integer& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator-(ChowClass a) { return a *= -1; }
    friend ChowClass operator*(const Integer& s, ChowClass a) { return a *= s; }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    void check_same(const ChowClass& o) const {
        if (o.ambient_dim() != ambient_dim())
            throw InputError("Chow classes live in different ambient spaces: P^" + std::to_string(ambient_dim()) +
                             " vs P^" + std::to_string(o.ambient_dim()));
    }

    /// "2[P^3] + 20[P^2] - [P^0]", descending dimension; "0" for the zero class.
    std::string to_text() const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first)
                out << (c < 0 ? "-" : "");
            else
                out << (c < 0 ? " - " : " + ");
            if (mag != 1) out << mag;
            out << "[P^" << k << "]";
            first = false;
        }
        if (first) out << "0";
        return out.str();
    }

   private:
    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const ChowClass& c) { return os << c.to_text(); }

namespace detail {

/// Truncated power series in H with integer coefficients, lowest degree first.
using HSeries = std::vector<Integer>;

inline HSeries to_series(const ChowClass& a) {
    HSeries s(a.ambient_dim() + 1);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.codim(k);
    return s;
}

inline ChowClass from_series(std::size_t n, const HSeries& s) {
    ChowClass r(n);
    for (std::size_t k = 0; k <= n && k < s.size(); ++k) r.codim(k) = s[k];
    return r;
}

inline HSeries series_mul(const HSeries& a, const HSeries& b, std::size_t len) {
    HSeries r(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// (1 + dH)^k truncated to `len` terms; negative k expands the geometric
/// series, which keeps every coefficient integral.
inline HSeries binomial_series(const Integer& d, long long k, std::size_t len) {
    HSeries r(len);
    if (len == 0) return r;
    Integer binom = 1;  // running C(k, j) or C(m + j - 1, j)
    Integer dpow = 1;
    const bool negative = k < 0;
    const long long m = negative ? -k : k;
    for (std::size_t j = 0; j < len; ++j) {
        if (!negative && static_cast<long long>(j) > m) break;
        r[j] = binom * dpow;
        if (negative) {
            binom = binom * (m + static_cast<long long>(j)) / (static_cast<long long>(j) + 1);
            dpow *= -d;
        } else {
            binom = binom * (m - static_cast<long long>(j)) / (static_cast<long long>(j) + 1);
            dpow *= d;
        }
    }
    return r;
}

}  // namespace detail

/// Intersection product: [P^i].[P^j] = [P^{i+j-n}], zero below dimension 0.
inline ChowClass intersect(const ChowClass& a, const ChowClass& b) {
    a.check_same(b);
    const std::size_t n = a.ambient_dim();
    return detail::from_series(n, detail::series_mul(detail::to_series(a), detail::to_series(b), n + 1));
}

/// A . (1 + dH)^k for any integer k.
inline ChowClass line_series(const ChowClass& a, const Integer& d, long long k) {
    const std::size_t n = a.ambient_dim();
    return detail::from_series(n, detail::series_mul(detail::to_series(a), detail::binomial_series(d, k, n + 1), n + 1));
}

/// c(T P^n) capped with A, i.e. (1 + H)^{n+1} . A.
inline ChowClass cap_tangent(const ChowClass& a) {
    return line_series(a, 1, static_cast<long long>(a.ambient_dim()) + 1);
}

/// A (x) O(dH): the codimension-i part is divided by (1 + dH)^i.
inline ChowClass twist(const ChowClass& a, const Integer& d) {
    const std::size_t n = a.ambient_dim();
    detail::HSeries acc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Integer& c = a.codim(i);
        if (c == 0) continue;
        detail::HSeries inv = detail::binomial_series(d, -static_cast<long long>(i), n + 1 - i);
        for (std::size_t j = 0; j < inv.size(); ++j) acc[i + j] += c * inv[j];
    }
    return detail::from_series(n, acc);
}

/// Flips the sign of every odd-codimension component.
inline ChowClass dual(const ChowClass& a) {
    ChowClass r = a;
    for (std::size_t k = 1; k <= a.ambient_dim(); k += 2) r.codim(k) = -r.codim(k);
    return r;
}

/// Segre class of a degree-d hypersurface: dH / (1 + dH).
inline ChowClass cartier_segre(std::size_t n, long long d) {
    if (d <= 0) throw InputError("cartier_segre: degree must be positive");
    if (n < 1) throw InputError("cartier_segre: ambient dimension must be positive");
    return line_series(ChowClass::linear(n, n - 1, d), d, -1);
}

/// [P^n] - S^dual.
inline ChowClass s_hat(const ChowClass& segre_class) {
    return ChowClass::fundamental(segre_class.ambient_dim()) - dual(segre_class);
}

/// Degree-zero coefficient; for a CSM class this is the Euler characteristic.
inline Integer euler_char(const ChowClass& c) { return c[0]; }

}  // namespace segre

#endif  // SEGRE_CHOW_HPP
