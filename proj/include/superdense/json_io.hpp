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

// JSON encodings for kets, density matrices, capacity reports, factorization
// reports and session transcripts.
//
//   Ket:            {"num_qubits": n, "amplitudes": [[re, im], ...]}
//   DensityMatrix:  {"dim": d, "entries": [[[re, im], ...], ...]}  row-major
//   CapacityReport: {"d_A", "S_B", "S_AB", "chi", "holevo"}, 12 significant digits
//   Transcript:     {"N", "seed", "steps": [{"message", "pauli", "qubits_transmitted",
//                                            "outcome", "success"}]}

#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "superdense/bellbasis.hpp"
#include "superdense/capacity.hpp"
#include "superdense/protocol.hpp"
#include "superdense/statevec.hpp"

namespace superdense {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("complex number must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

/// Rounds to 12 significant digits.
inline double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

template <typename F>
auto rethrow_as_invalid(const char *what, F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

}  // namespace detail

inline json to_json(const Ket &k) {
    json amps = json::array();
    for (const auto &a : k.amplitudes()) {
        amps.push_back(detail::complex_to_json(a));
    }
    return {{"num_qubits", k.num_qubits()}, {"amplitudes", std::move(amps)}};
}

inline Ket ket_from_json(const json &j) {
    return detail::rethrow_as_invalid("ket", [&] {
        const auto n = j.at("num_qubits").get<std::size_t>();
        const auto &arr = j.at("amplitudes");
        if (!arr.is_array()) {
            throw std::invalid_argument("ket amplitudes must be an array");
        }
        std::vector<Complex> amps;
        amps.reserve(arr.size());
        for (const auto &a : arr) {
            amps.push_back(detail::complex_from_json(a));
        }
        return Ket(n, std::move(amps));
    });
}

inline json to_json(const DensityMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(detail::complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

inline DensityMatrix density_matrix_from_json(const json &j) {
    return detail::rethrow_as_invalid("density matrix", [&] {
        const auto d = j.at("dim").get<std::size_t>();
        const auto &rows = j.at("entries");
        if (!rows.is_array() || rows.size() != d) {
            throw std::invalid_argument("density matrix must have 'dim' rows");
        }
        ComplexMatrix m(d);
        for (std::size_t r = 0; r < d; ++r) {
            if (!rows[r].is_array() || rows[r].size() != d) {
                throw std::invalid_argument("density matrix row " + std::to_string(r) + " has the wrong length");
            }
            for (std::size_t c = 0; c < d; ++c) {
                m(r, c) = detail::complex_from_json(rows[r][c]);
            }
        }
        return DensityMatrix(std::move(m));
    });
}

inline json to_json(const CapacityReport &r) {
    return {{"d_A", r.d_A},
            {"S_B", detail::round12(r.entropy_B)},
            {"S_AB", detail::round12(r.entropy_AB)},
            {"chi", detail::round12(r.chi)},
            {"holevo", detail::round12(r.holevo)}};
}

inline CapacityReport capacity_report_from_json(const json &j) {
    return detail::rethrow_as_invalid("capacity report", [&] {
        CapacityReport r;
        r.d_A = j.at("d_A").get<std::int64_t>();
        r.entropy_B = j.at("S_B").get<double>();
        r.entropy_AB = j.at("S_AB").get<double>();
        r.chi = j.at("chi").get<double>();
        r.holevo = j.at("holevo").get<double>();
        return r;
    });
}

inline json to_json(const FactorizationReport &r) {
    return {{"g_index", r.g_index},
            {"first", std::string(to_string(r.first))},
            {"second", std::string(to_string(r.second))},
            {"max_deviation", r.max_deviation}};
}

inline FactorizationReport factorization_report_from_json(const json &j) {
    return detail::rethrow_as_invalid("factorization report", [&] {
        FactorizationReport r;
        r.g_index = GIndex(j.at("g_index").get<int>()).value();
        r.first = bell_label_from_string(j.at("first").get<std::string>());
        r.second = bell_label_from_string(j.at("second").get<std::string>());
        r.max_deviation = j.at("max_deviation").get<double>();
        return r;
    });
}

inline json to_json(const Transcript &t) {
    json steps = json::array();
    for (const auto &s : t.steps) {
        steps.push_back({{"message", s.message},
                         {"pauli", s.pauli},
                         {"qubits_transmitted", s.qubits_transmitted},
                         {"outcome", s.outcome},
                         {"success", s.success}});
    }
    return {{"N", t.n}, {"seed", t.seed}, {"steps", std::move(steps)}};
}

inline Transcript transcript_from_json(const json &j) {
    return detail::rethrow_as_invalid("transcript", [&] {
        Transcript t;
        t.n = j.at("N").get<int>();
        t.seed = j.at("seed").get<std::uint64_t>();
        for (const auto &s : j.at("steps")) {
            TranscriptStep step;
            step.message = s.at("message").get<Message>();
            step.pauli = s.at("pauli").get<std::string>();
            // Reject tokens that do not parse for this N.
            (void)PauliString::from_tokens(step.pauli, static_cast<std::size_t>(t.n));
            step.qubits_transmitted = s.value("qubits_transmitted", t.n);
            step.outcome = s.at("outcome").get<Message>();
            step.success = s.at("success").get<bool>();
            t.steps.push_back(std::move(step));
        }
        return t;
    });
}

}  // namespace superdense
