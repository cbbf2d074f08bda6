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

// segre-cli SESSION [COMMAND...]
//
// Runs COMMAND (or every `run` line of the session when none is given) and
// prints a report per command. Exit status is the worst over all commands:
// 0 ok, 1 identity failed, 2 inconclusive, 3 input error.

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segre/cli.hpp"

namespace {

int severity(int code) {
    switch (code) {
        case segre::kExitInputError: return 3;
        case segre::kExitInconclusive: return 2;
        case segre::kExitFailure: return 1;
        default: return 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segre, CSM and Chern-Fulton classes of subschemes of P^n over F_p"};
    std::string session_path;
    std::vector<std::string> command;
    std::optional<std::uint32_t> prime;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 3;
    std::size_t max_gens = segre::kDefaultMaxGenerators;
    std::string format = "text";

    app.add_option("session", session_path, "Session file")->required();
    app.add_option("command", command, "Command, e.g. 'csm X' or 'verify csm-product X Y'");
    app.add_option("--prime", prime, "Prime modulus (default: the session's, else drawn from the seed)");
    app.add_option("--seed", seed, "Random seed (default: the session's, else 0)");
    auto* trials_opt = app.add_option("--trials", trials, "Independent (prime, seed) trials")
                           ->check(CLI::PositiveNumber)
                           ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-gens", max_gens, "Generator limit for inclusion-exclusion")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.allow_extras(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : segre::kExitInputError;
    }

    const auto fmt = format == "json" ? segre::OutputFormat::Json : segre::OutputFormat::Text;
    segre::SessionOverrides overrides;
    overrides.prime = prime;
    overrides.seed = seed;
    if (trials_opt->count() > 0) overrides.trials = trials;
    overrides.max_generators = max_gens;

    segre::Session session;
    try {
        session = segre::parse_session(session_path, overrides);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return segre::kExitInputError;
    }

    std::vector<std::pair<std::size_t, std::string>> commands;
    if (!command.empty()) {
        std::string joined;
        for (const auto& w : command) joined += (joined.empty() ? "" : " ") + w;
        commands.emplace_back(0, joined);
    } else {
        commands = session.commands;
    }
    if (commands.empty()) {
        std::cerr << "nothing to run: give a command or add 'run' lines to the session\n";
        return segre::kExitInputError;
    }

    int worst = segre::kExitOk;
    for (const auto& [line, text] : commands) {
        int code = segre::kExitOk;
        try {
            const auto result = segre::run_command(session, text);
            std::cout << segre::emit_report(result, fmt);
            code = result.exit_code();
        } catch (const segre::InputError& e) {
            std::cerr << (line ? session.source + ":" + std::to_string(line) + ": " : std::string()) << "error: "
                      << e.what() << '\n';
            code = segre::kExitInputError;
        } catch (const segre::GenericityError& e) {
            std::cerr << "inconclusive: " << e.what() << '\n';
            code = segre::kExitInconclusive;
        }
        if (severity(code) > severity(worst)) worst = code;
    }
    std::cout.flush();
    return worst;
}
