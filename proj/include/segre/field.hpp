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

#ifndef SEGRE_FIELD_HPP
#define SEGRE_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace segre {

/// Thrown for malformed or inconsistent user input (bad syntax, ring
/// mismatch, violated preconditions).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Thrown when repeated random draws fail to produce a generic
/// configuration.
class GenericityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic in Z/pZ for an odd prime p < 2^31. Elements are stored
/// reduced in [0, p).
class PrimeField {
   public:
    using value_type = std::uint32_t;

    constexpr PrimeField() noexcept = default;
    explicit constexpr PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31)) throw InputError("prime out of range: " + std::to_string(p));
    }

    constexpr std::uint32_t prime() const noexcept { return p_; }

    constexpr value_type add(value_type a, value_type b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    constexpr value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    constexpr value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    constexpr value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    constexpr value_type pow(value_type a, std::uint64_t e) const noexcept {
        std::uint64_t r = 1 % p_, base = a;
        while (e) {
            if (e & 1) r = (r * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return static_cast<value_type>(r);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero in prime field");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<value_type>(t);
    }
    /// Reduce a signed integer into [0, p).
    constexpr value_type from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    /// Symmetric representative in (-p/2, p/2].
    constexpr std::int64_t to_signed(value_type a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend constexpr bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint32_t p_ = 2147483647u;
};

/// SplitMix64 finalizer; the single seed-derivation rule used everywhere.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic stream of field elements. Uses plain modular reduction of a
/// mt19937_64 draw so the sequence is identical across standard libraries.
class FieldRng {
   public:
    FieldRng(const PrimeField& field, std::uint64_t seed) : field_(field), engine_(seed) {}

    std::uint32_t element() { return static_cast<std::uint32_t>(engine_() % field_.prime()); }
    std::uint32_t nonzero() {
        for (;;)
            if (auto v = element(); v != 0) return v;
    }
    std::uint64_t raw() { return engine_(); }
    const PrimeField& field() const noexcept { return field_; }

   private:
    PrimeField field_;
    std::mt19937_64 engine_;
};

namespace detail {

constexpr std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

constexpr std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 32-bit inputs (bases 2, 7, 61).
constexpr bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// A prime in [2^30, 2^31) chosen deterministically from the seed.
inline std::uint32_t random_prime(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (std::uint64_t k = 0;; ++k) {
        std::uint32_t candidate = static_cast<std::uint32_t>((1u << 30) | (mix_seed(state, k) & ((1u << 30) - 1))) | 1u;
        if (is_prime_u32(candidate)) return candidate;
    }
}

}  // namespace segre

#endif  // SEGRE_FIELD_HPP
