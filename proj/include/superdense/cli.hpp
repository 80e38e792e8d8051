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

// Subcommand bodies for the `superdense` tool. Each command writes its
// primary output to `out`, diagnostics to `err`, and returns an exit code.
// Argument parsing lives in tools/superdense.cpp.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "superdense/bellbasis.hpp"
#include "superdense/capacity.hpp"
#include "superdense/json_io.hpp"
#include "superdense/protocol.hpp"
#include "superdense/statevec.hpp"

namespace superdense::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxEmissionPairs = 4;
/// Kets up to this many qubits go through the full density-matrix route.
inline constexpr std::size_t kMaxDenseCapacityQubits = 6;

enum class Format { Json, Table };

struct CliConfig {
    std::string subcommand;
    int n = 2;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> out_path;
    Format format = Format::Json;
};

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

/// Exact name for 2^(-k/2): "1", "1/√2", "1/2", "1/(2√2)", "1/4", ...
inline std::optional<std::string> radical_name(double magnitude) {
    for (int k = 0; k <= 2 * static_cast<int>(kMaxQubits); ++k) {
        if (std::abs(magnitude - std::pow(2.0, -0.5 * k)) <= kStateTolerance) {
            if (k == 0) {
                return "1";
            }
            if (k % 2 == 0) {
                return "1/" + std::to_string(std::int64_t{1} << (k / 2));
            }
            if (k == 1) {
                return "1/√2";
            }
            return "1/(" + std::to_string(std::int64_t{1} << (k / 2)) + "√2)";
        }
    }
    return std::nullopt;
}

/// "+1/2", "-1/√2", "+i·1/2", or a decimal fallback.
inline std::string format_coefficient(Complex c) {
    auto signed_real = [](double v, const char *prefix) {
        const char *sign = v < 0 ? "-" : "+";
        if (auto name = radical_name(std::abs(v))) {
            return std::string(sign) + prefix + *name;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s%.10g", sign, prefix, std::abs(v));
        return std::string(buf);
    };
    if (std::abs(c.imag()) <= kStateTolerance) {
        return signed_real(c.real(), "");
    }
    if (std::abs(c.real()) <= kStateTolerance) {
        return signed_real(c.imag(), "i·");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "+(%.10g%+.10gi)", c.real(), c.imag());
    return buf;
}

inline std::string basis_label(std::size_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> (num_qubits - 1 - q)) & 1u) {
            s[q] = '1';
        }
    }
    return s;
}

/// "+1/2|0000⟩ +1/2|0101⟩ ..." over the nonzero amplitudes.
inline std::string format_ket(const Ket &k) {
    std::string out;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        if (std::abs(k[i]) <= kStateTolerance) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += format_coefficient(k[i]) + "|" + basis_label(i, k.num_qubits()) + "⟩";
    }
    return out;
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

inline int cmd_basis(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n < 1 || cfg.n > kMaxEmissionPairs) {
        err << "basis: N=" << cfg.n << " exceeds the emission cap (1 <= N <= " << kMaxEmissionPairs << ")\n";
        return kExitUsage;
    }
    json states = json::array();
    std::ostringstream table;

    if (cfg.n == 2) {
        for (int i = 1; i <= 16; ++i) {
            const GIndex g(i);
            if ((i - 1) % 4 == 0) {
                table << (i > 1 ? "\n" : "") << "Group " << g.group() << ":\n";
            }
            const Ket k = g_state(g);
            const Message m = message_of_g_index(g);
            table << "  |g" << i << "⟩ (s" << m << ") = " << format_ket(k) << "\n";
            states.push_back({{"label", "g" + std::to_string(i)}, {"group", g.group()}, {"message", m}, {"ket", to_json(k)}});
        }
    } else {
        for (Message j = 0; j < detail::message_count(cfg.n); ++j) {
            const Ket k = s_state(j, cfg.n);
            json entry = {{"label", "s" + std::to_string(j)}, {"message", j}, {"pauli", pauli_string(j, cfg.n).to_tokens()}};
            table << "  |s" << j << "⟩";
            if (cfg.n == 1) {
                for (auto b : kAllBellLabels) {
                    if (equal_up_to_global_phase(k, bell(b))) {
                        table << " = |" << symbol(b) << "⟩";
                        entry["bell"] = std::string(to_string(b));
                    }
                }
            }
            table << " = " << format_ket(k) << "\n";
            entry["ket"] = to_json(k);
            states.push_back(std::move(entry));
        }
    }

    if (cfg.format == Format::Table) {
        out << table.str();
    } else {
        out << json{{"N", cfg.n}, {"states", std::move(states)}}.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// roundtrip
// ---------------------------------------------------------------------------

inline int cmd_roundtrip(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n < 1 || cfg.n > kMaxEnumerationPairs) {
        err << "roundtrip: N must be in [1, " << kMaxEnumerationPairs << "]\n";
        return kExitUsage;
    }
    const RoundtripReport r = roundtrip_all(cfg.n);
    const std::string summary = std::to_string(2 * r.n) + " bits via " + std::to_string(r.qubits_per_message) + " qubits";
    if (cfg.format == Format::Table) {
        out << "N=" << r.n << ": " << r.message_count << " messages, " << summary << " ("
            << r.bits_per_qubit << " bits per qubit), " << r.failures.size() << " failures\n";
    } else {
        out << json{{"N", r.n},
                    {"messages", r.message_count},
                    {"qubits_per_message", r.qubits_per_message},
                    {"bits_per_qubit", r.bits_per_qubit},
                    {"summary", summary},
                    {"failures", r.failures}}
                   .dump(2)
            << "\n";
    }
    return r.ok() ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// capacity
// ---------------------------------------------------------------------------

/// Either a pure state or a mixed one, as selected on the command line.
struct SelectedState {
    std::optional<Ket> ket;
    std::optional<DensityMatrix> rho;

    std::size_t dim() const { return ket ? ket->dim() : rho->dim(); }
};

/// Resolves g1, ghz4, s0:N or file:PATH. Throws std::invalid_argument.
inline SelectedState select_state(const std::string &selector) {
    if (selector == "g1") {
        return {g_state(GIndex(1)), std::nullopt};
    }
    if (selector == "ghz4") {
        return {ghz_family(GhzLabel::GhzPlus), std::nullopt};
    }
    if (selector.rfind("s0:", 0) == 0) {
        std::size_t used = 0;
        const int n = std::stoi(selector.substr(3), &used);
        if (used != selector.size() - 3) {
            throw std::invalid_argument("malformed selector: " + selector);
        }
        return {s0(n), std::nullopt};
    }
    if (selector.rfind("file:", 0) == 0) {
        const std::string path = selector.substr(5);
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot read state file: " + path);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw std::invalid_argument("state file is not valid JSON: " + std::string(e.what()));
        }
        if (j.contains("dim")) {
            return {std::nullopt, density_matrix_from_json(j)};
        }
        return {ket_from_json(j), std::nullopt};
    }
    throw std::invalid_argument("unknown state selector '" + selector + "' (expected g1, ghz4, s0:N or file:PATH)");
}

inline int cmd_capacity(const CliConfig &cfg, const std::string &selector, std::optional<std::int64_t> d_a,
                        std::ostream &out, std::ostream &err) {
    CapacityReport report;
    try {
        const SelectedState state = select_state(selector);
        const auto dim = static_cast<std::int64_t>(state.dim());
        const std::int64_t alice = d_a.value_or(static_cast<std::int64_t>(std::sqrt(static_cast<double>(dim)) + 0.5));
        if (alice < 1 || dim % alice != 0) {
            err << "capacity: d_A=" << alice << " does not divide the state dimension " << dim << "\n";
            return kExitUsage;
        }
        if (state.rho) {
            report = dense_coding_capacity(*state.rho, alice, dim / alice);
        } else if (state.ket->num_qubits() <= kMaxDenseCapacityQubits) {
            report = dense_coding_capacity(DensityMatrix::pure(*state.ket), alice, dim / alice);
        } else {
            if (!std::has_single_bit(static_cast<std::uint64_t>(alice))) {
                err << "capacity: d_A must be a power of two for large kets\n";
                return kExitUsage;
            }
            report = dense_coding_capacity(*state.ket, static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(alice))));
        }
    } catch (const std::exception &e) {
        err << "capacity: " << e.what() << "\n";
        return kExitUsage;
    }
    if (cfg.format == Format::Table) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "d_A = %lld\nS(rho_B) = %.12g\nS(rho_AB) = %.12g\nchi = %.12g\nHolevo bound = %.12g\n",
                      static_cast<long long>(report.d_A), report.entropy_B, report.entropy_AB, report.chi, report.holevo);
        out << buf;
    } else {
        out << to_json(report).dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// factorize
// ---------------------------------------------------------------------------

inline int cmd_factorize(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    json rows = json::array();
    std::ostringstream table;
    for (int i = 1; i <= 16; ++i) {
        FactorizationReport r;
        try {
            r = factorize_report(GIndex(i));
        } catch (const std::logic_error &e) {
            err << "factorize: " << e.what() << "\n";
            return kExitVerificationFailure;
        }
        // Independent reconstruction before emitting the row.
        const Ket rebuilt = tensor(bell(r.first), bell(r.second));
        const Ket target = pair_adjacent_order(g_state(GIndex(i)));
        if (r.max_deviation > kStateTolerance || !equal_up_to_global_phase(rebuilt, target)) {
            err << "factorize: reconstruction of g" << i << " failed\n";
            return kExitVerificationFailure;
        }
        rows.push_back(to_json(r));
        char dev[32];
        std::snprintf(dev, sizeof dev, "%.3g", r.max_deviation);
        table << "|g" << i << "⟩ = |" << symbol(r.first) << "⟩_AB |" << symbol(r.second) << "⟩_AB   (max deviation "
              << dev << ")\n";
    }
    if (cfg.format == Format::Table) {
        out << table.str();
    } else {
        out << rows.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// session
// ---------------------------------------------------------------------------

/// Draws `count` uniform messages for N pairs from a PRNG seeded with `seed`.
inline std::vector<Message> random_messages(int n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Message> out(count);
    const int width = 2 * n;
    for (auto &m : out) {
        m = rng() >> (64 - width);
    }
    return out;
}

inline int cmd_session(const CliConfig &cfg, const std::vector<Message> &messages, std::optional<std::size_t> random_count,
                       std::ostream &out, std::ostream &err) {
    if (cfg.n < 1 || cfg.n > kMaxEnumerationPairs) {
        err << "session: N must be in [1, " << kMaxEnumerationPairs << "]\n";
        return kExitUsage;
    }
    if (random_count && !messages.empty()) {
        err << "session: pass either --messages or --random, not both\n";
        return kExitUsage;
    }
    const std::vector<Message> payload = random_count ? random_messages(cfg.n, *random_count, cfg.seed) : messages;
    Transcript t;
    try {
        t = session(cfg.n, payload, cfg.seed);
    } catch (const std::out_of_range &e) {
        err << "session: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all_ok = true;
    for (const auto &s : t.steps) {
        all_ok = all_ok && s.success;
    }
    if (cfg.format == Format::Table) {
        out << "N=" << t.n << " seed=" << t.seed << "\n";
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto &s = t.steps[i];
            out << "step " << i << ": message " << s.message << " pauli [" << s.pauli << "] sent " << s.qubits_transmitted
                << " qubits, outcome " << s.outcome << (s.success ? " ok" : " FAIL") << "\n";
        }
    } else {
        out << to_json(t).dump(2) << "\n";
    }
    return all_ok ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// ghz-compare
// ---------------------------------------------------------------------------

inline json ghz_compare_report() {
    auto entry = [](const Ket &k) {
        const auto cap = dense_coding_capacity(DensityMatrix::pure(k), 4, 4);
        return json{{"orbit", orthogonal_orbit_count(k, 2)}, {"chi", detail::round12(cap.chi)}};
    };
    return {{"g1", entry(g_state(GIndex(1)))}, {"ghz", entry(ghz_family(GhzLabel::GhzPlus))}};
}

inline int cmd_ghz_compare(const CliConfig &cfg, std::ostream &out, std::ostream & /*err*/) {
    const json report = ghz_compare_report();
    if (cfg.format == Format::Table) {
        out << "state  orbit  chi\n";
        for (const char *key : {"g1", "ghz"}) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%-5s  %5d  %.12g\n", key, report[key]["orbit"].get<int>(),
                          report[key]["chi"].get<double>());
            out << buf;
        }
    } else {
        out << report.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace superdense::cli
