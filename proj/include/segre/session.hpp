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

#ifndef SEGRE_SESSION_HPP
#define SEGRE_SESSION_HPP

// Session files:
//
//   # comment
//   format_version 1
//   ring n=5
//   prime auto            (or an explicit prime below 2^31)
//   seed 7
//   trials 3
//   ideal X = x0*x1, x0*x2
//   function phi = 2*V(x0) - V(x0*x1)
//   run csm X
//
// Directives may appear in any order; every polynomial is reduced modulo the
// session prime and must be homogeneous.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charclasses.hpp"
#include "field.hpp"
#include "polynomial.hpp"

namespace segre {

inline constexpr int kSessionFormatVersion = 1;

/// Input error pinned to a position in a session file.
class SessionError : public InputError {
   public:
    SessionError(const std::string& source, std::size_t line, std::size_t column, const std::string& msg)
        : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": error: " + msg),
          line_(line),
          column_(column),
          message_(msg) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Command-line settings that take precedence over the file.
struct SessionOverrides {
    std::optional<std::uint32_t> prime;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> max_generators;
};

struct Session {
    std::string source;
    std::size_t n = 0;
    PrimeField field;
    bool auto_prime = true;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    std::size_t max_generators = kDefaultMaxGenerators;
    std::map<std::string, HomogeneousIdeal> ideals;
    std::map<std::string, ConstructibleFunction> functions;
    /// `run` lines with their line numbers.
    std::vector<std::pair<std::size_t, std::string>> commands;
};

/// Prime used for "prime auto".
inline std::uint32_t auto_prime(std::uint64_t seed) { return random_prime(mix_seed(seed, 0x7072696d65ull)); }

namespace detail {

struct SourceLine {
    std::size_t number;
    std::string text;  // comment stripped
};

inline std::size_t skip_blank(std::string_view s, std::size_t pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos;
}

inline std::size_t trim_end(std::string_view s, std::size_t end) {
    while (end > 0 && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return end;
}

inline bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

template <class T>
std::optional<T> parse_unsigned(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

class SessionParser {
   public:
    SessionParser(std::string_view text, std::string source, const SessionOverrides& overrides)
        : source_(std::move(source)), overrides_(overrides) {
        std::size_t start = 0, number = 1;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string line(text.substr(start, end - start));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            lines_.push_back({number, std::move(line)});
            if (end == text.size()) break;
            start = end + 1;
            ++number;
        }
    }

    Session parse() {
        Session s;
        s.source = source_;
        std::optional<std::uint32_t> file_prime;
        bool have_ring = false, have_prime = false, have_seed = false, have_trials = false;

        // header directives first: the prime must be known before parsing polynomials
        for (const auto& line : lines_) {
            auto [keyword, col, rest] = split_keyword(line);
            if (keyword == "ring") {
                if (have_ring) fail(line, col, "duplicate ring declaration");
                s.n = parse_ring(line, rest);
                have_ring = true;
            } else if (keyword == "prime") {
                if (have_prime) fail(line, col, "duplicate prime declaration");
                const std::string_view arg = argument(line, rest);
                if (arg != "auto") {
                    auto p = parse_unsigned<std::uint32_t>(arg);
                    if (!p || *p < 3 || *p >= (1u << 31) || !is_prime_u32(*p))
                        fail(line, rest + 1, "prime must be 'auto' or a prime between 3 and 2^31");
                    file_prime = *p;
                }
                have_prime = true;
            } else if (keyword == "seed") {
                if (have_seed) fail(line, col, "duplicate seed declaration");
                auto v = parse_unsigned<std::uint64_t>(argument(line, rest));
                if (!v) fail(line, rest + 1, "seed must be a nonnegative integer");
                s.seed = *v;
                have_seed = true;
            } else if (keyword == "trials") {
                if (have_trials) fail(line, col, "duplicate trials declaration");
                auto v = parse_unsigned<std::size_t>(argument(line, rest));
                if (!v || *v == 0) fail(line, rest + 1, "trials must be a positive integer");
                s.trials = *v;
                have_trials = true;
            } else if (keyword == "format_version") {
                auto v = parse_unsigned<int>(argument(line, rest));
                if (!v || *v != kSessionFormatVersion)
                    fail(line, rest + 1, "unsupported format_version (expected " +
                                             std::to_string(kSessionFormatVersion) + ")");
            } else if (keyword.empty() || keyword == "ideal" || keyword == "function" || keyword == "run") {
                continue;
            } else {
                fail(line, col, "unknown directive '" + std::string(keyword) + "'");
            }
        }
        if (!have_ring) throw SessionError(source_, 1, 1, "missing ring declaration");

        if (overrides_.seed) s.seed = *overrides_.seed;
        if (overrides_.trials) s.trials = *overrides_.trials;
        if (overrides_.max_generators) s.max_generators = *overrides_.max_generators;
        if (overrides_.prime) {
            if (!is_prime_u32(*overrides_.prime) || *overrides_.prime < 3 || *overrides_.prime >= (1u << 31))
                throw InputError("--prime must be a prime between 3 and 2^31");
            s.field = PrimeField(*overrides_.prime);
            s.auto_prime = false;
        } else if (file_prime) {
            s.field = PrimeField(*file_prime);
            s.auto_prime = false;
        } else {
            s.field = PrimeField(auto_prime(s.seed));
            s.auto_prime = true;
        }

        for (const auto& line : lines_) {
            auto [keyword, col, rest] = split_keyword(line);
            if (keyword == "ideal") {
                parse_ideal(s, line, rest);
            } else if (keyword == "function") {
                parse_function(s, line, rest);
            } else if (keyword == "run") {
                const std::string_view cmd = argument(line, rest);
                if (cmd.empty()) fail(line, rest + 1, "run needs a command");
                s.commands.emplace_back(line.number, std::string(cmd));
            }
        }
        return s;
    }

   private:
    struct Keyword {
        std::string_view word;
        std::size_t column;  // 1-based
        std::size_t rest;    // 0-based offset after the keyword
    };

    [[noreturn]] void fail(const SourceLine& line, std::size_t column, const std::string& msg) const {
        throw SessionError(source_, line.number, column, msg);
    }

    static Keyword split_keyword(const SourceLine& line) {
        std::string_view t = line.text;
        std::size_t b = skip_blank(t, 0), e = b;
        while (e < t.size() && !std::isspace(static_cast<unsigned char>(t[e])) && t[e] != '=') ++e;
        return {t.substr(b, e - b), b + 1, e};
    }

    static std::string_view argument(const SourceLine& line, std::size_t from) {
        std::string_view t = line.text;
        std::size_t b = skip_blank(t, from), e = trim_end(t, t.size());
        return b < e ? t.substr(b, e - b) : std::string_view{};
    }

    std::size_t parse_ring(const SourceLine& line, std::size_t rest) const {
        std::string_view t = line.text;
        std::size_t pos = skip_blank(t, rest);
        if (t.substr(pos, 1) != "n") fail(line, pos + 1, "expected 'n=<dimension>'");
        pos = skip_blank(t, pos + 1);
        if (t.substr(pos, 1) != "=") fail(line, pos + 1, "expected '='");
        pos = skip_blank(t, pos + 1);
        const std::string_view arg = t.substr(pos, trim_end(t, t.size()) - pos);
        auto n = parse_unsigned<std::size_t>(arg);
        if (!n || *n < 1 || *n > 15) fail(line, pos + 1, "ring dimension must be between 1 and 15");
        return *n;
    }

    /// `NAME =` prefix of a declaration; returns the name and the offset after '='.
    std::pair<std::string, std::size_t> declaration(const Session& s, const SourceLine& line, std::size_t rest) const {
        std::string_view t = line.text;
        std::size_t b = skip_blank(t, rest), e = b;
        while (e < t.size() && !std::isspace(static_cast<unsigned char>(t[e])) && t[e] != '=') ++e;
        const std::string_view name = t.substr(b, e - b);
        if (!valid_name(name)) fail(line, b + 1, "expected a name");
        std::size_t eq = skip_blank(t, e);
        if (eq >= t.size() || t[eq] != '=') fail(line, eq + 1, "expected '='");
        if (s.ideals.count(std::string(name)) || s.functions.count(std::string(name)))
            fail(line, b + 1, "duplicate name '" + std::string(name) + "'");
        return {std::string(name), eq + 1};
    }

    SparsePolynomial polynomial(const Session& s, const SourceLine& line, std::size_t begin, std::size_t end) const {
        std::string_view t = line.text;
        const std::size_t b = skip_blank(t, begin), e = trim_end(t.substr(0, end), end);
        if (b >= e) fail(line, begin + 1, "missing polynomial");
        try {
            SparsePolynomial f = parse_polynomial(t.substr(b, e - b), s.n, s.field);
            if (!f.is_homogeneous()) fail(line, b + 1, "inhomogeneous generator: " + std::string(t.substr(b, e - b)));
            return f;
        } catch (const ParseError& err) {
            fail(line, b + err.column(), err.message());
        }
    }

    void parse_ideal(Session& s, const SourceLine& line, std::size_t rest) const {
        auto [name, pos] = declaration(s, line, rest);
        std::string_view t = line.text;
        HomogeneousIdeal ideal(s.n + 1, s.field);
        std::size_t count = 0;
        for (std::size_t start = pos;;) {
            std::size_t comma = t.find(',', start);
            const std::size_t end = comma == std::string_view::npos ? t.size() : comma;
            ideal.add(polynomial(s, line, start, end));
            ++count;
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (count == 0) fail(line, pos + 1, "ideal needs at least one generator");
        s.ideals.emplace(name, std::move(ideal));
    }

    // function NAME = [+|-][c[*]]V(poly) ...
    void parse_function(Session& s, const SourceLine& line, std::size_t rest) const {
        auto [name, pos] = declaration(s, line, rest);
        std::string_view t = line.text;
        ConstructibleFunction phi(s.n, s.field);
        std::size_t i = skip_blank(t, pos);
        if (i >= t.size()) fail(line, i + 1, "function needs at least one term");
        bool first = true;
        while (i < t.size()) {
            int sign = 1;
            if (t[i] == '+' || t[i] == '-') {
                sign = t[i] == '-' ? -1 : 1;
                i = skip_blank(t, i + 1);
            } else if (!first) {
                fail(line, i + 1, "expected '+' or '-'");
            }
            Integer coefficient = 1;
            if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
                std::size_t j = i;
                while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
                coefficient = Integer(std::string(t.substr(i, j - i)));
                i = skip_blank(t, j);
                if (i < t.size() && t[i] == '*') i = skip_blank(t, i + 1);
            }
            if (t.substr(i, 2) != "V(") fail(line, i + 1, "expected V(<polynomial>)");
            const std::size_t open = i + 1;
            std::size_t close = open, depth = 0;
            for (; close < t.size(); ++close) {
                if (t[close] == '(') ++depth;
                if (t[close] == ')' && --depth == 0) break;
            }
            if (close >= t.size()) fail(line, open + 1, "unbalanced parentheses");
            SparsePolynomial f = polynomial(s, line, open + 1, close);
            if (f.degree() < 1) fail(line, open + 2, "V() needs a nonconstant polynomial");
            phi.add(sign * coefficient, std::move(f));
            i = skip_blank(t, close + 1);
            first = false;
        }
        s.functions.emplace(name, std::move(phi));
    }

    std::string source_;
    SessionOverrides overrides_;
    std::vector<SourceLine> lines_;
};

}  // namespace detail

/// Parses session text; `source` names it in diagnostics.
inline Session parse_session_text(std::string_view text, const SessionOverrides& overrides = {},
                                  std::string source = "<session>") {
    return detail::SessionParser(text, std::move(source), overrides).parse();
}

inline Session parse_session(const std::filesystem::path& path, const SessionOverrides& overrides = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open session file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_session_text(buffer.str(), overrides, path.string());
}

}  // namespace segre

#endif  // SEGRE_SESSION_HPP
