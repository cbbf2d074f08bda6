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

#ifndef SEGRE_CLI_HPP
#define SEGRE_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "charclasses.hpp"
#include "chow.hpp"
#include "session.hpp"
#include "verifier.hpp"

namespace segre {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInconclusive = 2, kExitInputError = 3 };

/// Result of segre / csm / cfulton / milnor / euler.
struct ComputeReport {
    std::string command;
    std::string target;
    ChowClass value;
    bool inconclusive = false;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string notes;
};

/// Everything one command produced.
struct CommandResult {
    std::string command;
    bool auto_prime = false;
    std::vector<ComputeReport> computations;
    std::vector<VerificationReport> verifications;
    std::optional<SplayedTestReport> splayed;

    int exit_code() const {
        bool failed = false;
        for (const auto& c : computations)
            if (c.inconclusive) return kExitInconclusive;
        for (const auto& v : verifications) {
            if (v.inconclusive) return kExitInconclusive;
            failed = failed || !v.pass;
        }
        if (splayed && !splayed->equal) failed = true;
        return failed ? kExitFailure : kExitOk;
    }
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

inline const HomogeneousIdeal& lookup_ideal(const Session& s, const std::string& name) {
    auto it = s.ideals.find(name);
    if (it == s.ideals.end()) throw InputError("unknown ideal '" + name + "'");
    return it->second;
}

inline const SparsePolynomial& lookup_hypersurface(const Session& s, const std::string& name) {
    const auto& ideal = lookup_ideal(s, name);
    if (ideal.generators().size() != 1 || ideal.generators()[0].degree() < 1)
        throw InputError("'" + name + "' must be a hypersurface: one nonconstant generator");
    return ideal.generators()[0];
}

inline const ConstructibleFunction& lookup_function(const Session& s, const std::string& name) {
    auto it = s.functions.find(name);
    if (it == s.functions.end()) throw InputError("unknown constructible function '" + name + "'");
    return it->second;
}

inline void expect_args(const std::vector<std::string>& tok, std::size_t count, const std::string& usage) {
    if (tok.size() != count) throw InputError("usage: " + usage);
}

inline ComputeReport compute(const Session& s, const std::string& what, const std::string& name) {
    std::function<ChowClass(const PrimeField&, std::uint64_t)> eval;
    if (what == "csm" && s.functions.count(name)) {
        const auto& phi = s.functions.at(name);
        eval = [&phi](const PrimeField& f, std::uint64_t seed) { return csm_constructible(rebase(phi, f), seed); };
    } else {
        const auto& ideal = lookup_ideal(s, name);
        const std::size_t k = s.max_generators;
        if (what == "segre")
            eval = [&](const PrimeField& f, std::uint64_t seed) { return segre_class(rebase(ideal, f), seed); };
        else if (what == "csm" || what == "euler")
            eval = [&, k](const PrimeField& f, std::uint64_t seed) { return csm(rebase(ideal, f), seed, k); };
        else if (what == "cfulton")
            eval = [&](const PrimeField& f, std::uint64_t seed) { return chern_fulton(rebase(ideal, f), seed); };
        else
            eval = [&, k](const PrimeField& f, std::uint64_t seed) { return milnor(rebase(ideal, f), seed, k); };
    }

    VerifyConfig cfg{s.seed, std::nullopt, s.trials, s.max_generators};
    ComputeReport out{what, name, ChowClass(s.n)};
    for (std::size_t k = 0; k < std::max<std::size_t>(1, s.trials); ++k) {
        const auto [p, seed] = trial_parameters(cfg, s.field.prime(), k);
        ChowClass c = eval(PrimeField(p), seed);
        if (what == "euler") c = ChowClass::linear(s.n, 0, euler_char(c));
        if (k == 0) {
            out.value = std::move(c);
            out.prime = p;
            out.seed = seed;
        } else if (!(c == out.value)) {
            out.inconclusive = true;
            out.notes += (out.notes.empty() ? "" : "; ") + std::string("trial ") + std::to_string(k) + " (prime " +
                         std::to_string(p) + ") gave " + c.to_text();
        }
    }
    out.trials = std::max<std::size_t>(1, s.trials);
    return out;
}

}  // namespace detail

/// Runs one command against a session. Throws InputError on unknown
/// commands or names and GenericityError when random draws stay degenerate.
inline CommandResult run_command(const Session& s, std::string_view command) {
    const auto tok = detail::tokenize(command);
    if (tok.empty()) throw InputError("empty command");
    CommandResult result;
    result.auto_prime = s.auto_prime;
    for (const auto& t : tok) result.command += (result.command.empty() ? "" : " ") + t;

    const std::string& head = tok[0];
    if (head == "segre" || head == "csm" || head == "cfulton" || head == "milnor" || head == "euler") {
        detail::expect_args(tok, 2, head + " <name>");
        result.computations.push_back(detail::compute(s, head, tok[1]));
        return result;
    }
    if (head != "verify") throw InputError("unknown command '" + head + "'");
    if (tok.size() < 2) throw InputError("usage: verify <identity> <args>");

    const VerifyConfig cfg{s.seed, std::nullopt, s.trials, s.max_generators};
    const std::string& id = tok[1];
    if (id == "csm-product") {
        detail::expect_args(tok, 4, "verify csm-product <X> <Y>");
        result.verifications.push_back(
            verify_csm_product(detail::lookup_ideal(s, tok[2]), detail::lookup_ideal(s, tok[3]), cfg));
    } else if (id == "fulton-product") {
        detail::expect_args(tok, 4, "verify fulton-product <X> <Y>");
        result.verifications.push_back(
            verify_fulton_product(detail::lookup_ideal(s, tok[2]), detail::lookup_ideal(s, tok[3]), cfg));
    } else if (id == "constructible-product") {
        detail::expect_args(tok, 4, "verify constructible-product <phi> <psi>");
        result.verifications.push_back(
            verify_constructible_product(detail::lookup_function(s, tok[2]), detail::lookup_function(s, tok[3]), cfg));
    } else if (id == "segre-relation") {
        detail::expect_args(tok, 6, "verify segre-relation <D1> <Z1> <D2> <Z2>");
        result.verifications.push_back(verify_segre_relation(
            detail::lookup_hypersurface(s, tok[2]), detail::lookup_ideal(s, tok[3]),
            detail::lookup_hypersurface(s, tok[4]), detail::lookup_ideal(s, tok[5]), cfg));
    } else if (id == "segre-multiplicativity") {
        detail::expect_args(tok, 4, "verify segre-multiplicativity <Z1> <Z2>");
        result.verifications.push_back(
            verify_segre_multiplicativity(detail::lookup_ideal(s, tok[2]), detail::lookup_ideal(s, tok[3]), cfg));
    } else if (id == "bertini") {
        detail::expect_args(tok, 4, "verify bertini <degree> <Y>");
        auto e = detail::parse_unsigned<unsigned>(tok[2]);
        if (!e || *e < 1 || *e > 16) throw InputError("bertini degree must be an integer between 1 and 16");
        result.verifications = verify_bertini(*e, detail::lookup_ideal(s, tok[3]), cfg);
    } else if (id == "complement") {
        detail::expect_args(tok, 4, "verify complement <D1> <D2>");
        result.verifications.push_back(
            verify_complement(detail::lookup_hypersurface(s, tok[2]), detail::lookup_hypersurface(s, tok[3]), cfg));
    } else if (id == "euler-surface") {
        detail::expect_args(tok, 4, "verify euler-surface <F> <G>");
        result.verifications.push_back(euler_surface_identity(detail::lookup_hypersurface(s, tok[2]),
                                                              detail::lookup_hypersurface(s, tok[3]), cfg));
    } else if (id == "splayed-test") {
        detail::expect_args(tok, 4, "verify splayed-test <D1> <D2>");
        result.splayed =
            jacobian_splayed_test(detail::lookup_hypersurface(s, tok[2]), detail::lookup_hypersurface(s, tok[3]));
    } else {
        throw InputError("unknown identity '" + id + "'");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Rendering

enum class OutputFormat { Text, Json };

/// Discrepancy terms with explicit signs, e.g. "+1·[P^0]".
inline std::string signed_terms(const ChowClass& c) {
    std::string out;
    for (std::size_t i = c.ambient_dim() + 1; i-- > 0;) {
        const Integer& a = c.coeffs()[i];
        if (a == 0) continue;
        if (!out.empty()) out += " ";
        out += (a > 0 ? "+" : "-") + Integer(a > 0 ? a : Integer(-a)).str() + "·[P^" + std::to_string(i) + "]";
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::ordered_json class_to_json(const ChowClass& c) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& a : c.coeffs()) {
        if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
            coeffs.push_back(static_cast<std::int64_t>(a));
        else
            coeffs.push_back(a.str());
    }
    return {{"n", c.ambient_dim()}, {"coeffs", std::move(coeffs)}};
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r, bool auto_prime) {
    nlohmann::ordered_json j;
    j["format_version"] = kSessionFormatVersion;
    j["identity"] = r.identity;
    j["lhs"] = class_to_json(r.lhs);
    j["rhs"] = class_to_json(r.rhs);
    j["pass"] = r.pass;
    j["inconclusive"] = r.inconclusive;
    j["discrepancy"] = class_to_json(r.discrepancy);
    j["prime"] = r.prime;
    j["prime_source"] = auto_prime ? "auto" : "explicit";
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["notes"] = r.notes;
    return j;
}

inline nlohmann::ordered_json report_to_json(const ComputeReport& r, bool auto_prime) {
    nlohmann::ordered_json j;
    j["format_version"] = kSessionFormatVersion;
    j["command"] = r.command;
    j["target"] = r.target;
    if (r.command == "euler") {
        const Integer& chi = r.value.coeffs()[0];
        j["euler_characteristic"] = chi.str();
    }
    j["class"] = class_to_json(r.value);
    j["inconclusive"] = r.inconclusive;
    j["prime"] = r.prime;
    j["prime_source"] = auto_prime ? "auto" : "explicit";
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["notes"] = r.notes;
    return j;
}

inline nlohmann::ordered_json report_to_json(const SplayedTestReport& r) {
    auto basis = [](const std::vector<SparsePolynomial>& polys) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& p : polys) a.push_back(p.to_string());
        return a;
    };
    nlohmann::ordered_json j;
    j["format_version"] = kSessionFormatVersion;
    j["identity"] = "splayed-test";
    j["equal"] = r.equal;
    j["containment"] = r.containment;
    j["jacobian_basis"] = basis(r.jacobian_basis);
    j["leibniz_basis"] = basis(r.leibniz_basis);
    j["notes"] = r.note;
    return j;
}

/// Text: human-readable block. JSON: one object per line, each carrying
/// "format_version".
inline std::string emit_report(const CommandResult& r, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        for (const auto& c : r.computations) out << report_to_json(c, r.auto_prime).dump() << '\n';
        for (const auto& v : r.verifications) out << report_to_json(v, r.auto_prime).dump() << '\n';
        if (r.splayed) out << report_to_json(*r.splayed).dump() << '\n';
        return out.str();
    }
    auto provenance = [&](std::uint32_t prime, std::uint64_t seed, std::size_t trials) {
        out << "  prime " << prime << (r.auto_prime ? " (auto)" : "") << ", seed " << seed << ", trials " << trials
            << '\n';
    };
    for (const auto& c : r.computations) {
        if (c.command == "euler")
            out << "euler " << c.target << " = " << c.value.coeffs()[0].str() << '\n';
        else
            out << c.command << ' ' << c.target << " = " << c.value.to_text() << '\n';
        if (c.inconclusive) out << "  INCONCLUSIVE: " << c.notes << '\n';
        provenance(c.prime, c.seed, c.trials);
    }
    for (const auto& v : r.verifications) {
        out << v.identity << ": " << (v.inconclusive ? "INCONCLUSIVE" : v.pass ? "PASS" : "FAIL") << '\n';
        out << "  lhs         = " << v.lhs.to_text() << '\n';
        out << "  rhs         = " << v.rhs.to_text() << '\n';
        out << "  discrepancy = " << signed_terms(v.discrepancy) << '\n';
        if (!v.notes.empty()) out << "  notes: " << v.notes << '\n';
        provenance(v.prime, v.seed, v.trials);
    }
    if (r.splayed) {
        out << "splayed-test: " << (r.splayed->equal ? "EQUAL" : "UNEQUAL") << '\n';
        out << "  containment: " << (r.splayed->containment ? "holds" : "violated") << '\n';
        auto basis = [&](const char* label, const std::vector<SparsePolynomial>& polys) {
            out << "  " << label << ":";
            for (std::size_t i = 0; i < polys.size(); ++i) out << (i ? ", " : " ") << polys[i].to_string();
            out << '\n';
        };
        basis("jacobian basis", r.splayed->jacobian_basis);
        basis("leibniz basis ", r.splayed->leibniz_basis);
        out << "  notes: " << r.splayed->note << '\n';
    }
    return out.str();
}

}  // namespace segre

#endif  // SEGRE_CLI_HPP
