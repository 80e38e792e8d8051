// Copyright 2026 The superdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "superdense/cli.hpp"

namespace {

using superdense::Message;
using namespace superdense::cli;

void add_common_flags(CLI::App *sub, CliConfig &cfg) {
    static const std::map<std::string, Format> kFormats = {{"json", Format::Json}, {"table", Format::Table}};
    sub->add_option("--n", cfg.n, "Number of Bell pairs N (Alice holds N qubits)");
    sub->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Generalized superdense coding simulator"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string selector = "g1";
    std::optional<std::int64_t> d_a;
    std::vector<Message> messages;
    std::optional<std::size_t> random_count;

    auto *basis = app.add_subcommand("basis", "Emit the generalized Bell basis");
    auto *roundtrip = app.add_subcommand("roundtrip", "Encode and decode every 2N-bit message");
    auto *capacity = app.add_subcommand("capacity", "Dense-coding capacity report for a state");
    auto *factorize = app.add_subcommand("factorize", "Bell-pair factorization of the sixteen g-states");
    auto *session = app.add_subcommand("session", "Simulate an Alice -> Bob session and write its transcript");
    auto *ghz = app.add_subcommand("ghz-compare", "Orbit counts and capacities of g1 versus GHZ");
    for (auto *sub : {basis, roundtrip, capacity, factorize, session, ghz}) {
        add_common_flags(sub, cfg);
    }
    capacity->add_option("--state", selector, "g1 | ghz4 | s0:N | file:PATH")->capture_default_str();
    capacity->add_option("--d-a", d_a, "Alice subsystem dimension (default: sqrt of the total)");
    session->add_option("--messages", messages, "Messages to send, e.g. --messages 5 0 15");
    session->add_option("--random", random_count, "Send COUNT uniformly random messages");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream out;
    int code = kExitUsage;
    if (*basis) {
        code = cmd_basis(cfg, out, std::cerr);
    } else if (*roundtrip) {
        code = cmd_roundtrip(cfg, out, std::cerr);
    } else if (*capacity) {
        code = cmd_capacity(cfg, selector, d_a, out, std::cerr);
    } else if (*factorize) {
        code = cmd_factorize(cfg, out, std::cerr);
    } else if (*session) {
        code = cmd_session(cfg, messages, random_count, out, std::cerr);
    } else if (*ghz) {
        code = cmd_ghz_compare(cfg, out, std::cerr);
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file " << *cfg.out_path << "\n";
            return kExitUsage;
        }
        file << out.str();
    } else {
        std::cout << out.str();
    }
    return code;
}
