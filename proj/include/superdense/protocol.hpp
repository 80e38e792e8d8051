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

// Superdense coding engine: Alice-local encoding, generalized Bell
// measurement, deterministic decoding and simulated sessions.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superdense/bellbasis.hpp"
#include "superdense/statevec.hpp"

namespace superdense {

using Message = std::uint64_t;

inline constexpr double kDecodeThreshold = 1.0 - 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 0x5DC0DE;

class NotABasisState : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_message(Message m, int n) {
    check_pairs(n, kMaxBasisPairs, "message");
    if (m >= message_count(n)) {
        throw std::out_of_range("message " + std::to_string(m) + " out of range for N=" + std::to_string(n) +
                                " (must be < " + std::to_string(message_count(n)) + ")");
    }
}

inline void check_register(const Ket &k, int n) {
    check_pairs(n, kMaxBasisPairs, "generalized Bell measurement");
    if (k.num_qubits() != 2 * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expected a " + std::to_string(2 * n) + "-qubit ket, got " +
                                    std::to_string(k.num_qubits()) + " qubits");
    }
}

/// Uniform double in [0, 1) from the top 53 bits; platform independent.
inline double unit_interval(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Alice's encoded state: pauli_string(m, N) applied to s0(N).
inline Ket encode(Message m, int n) {
    detail::check_message(m, n);
    return s_state(m, n);
}

/// <s_j|k> for every j, in message order.
///
/// Uses the closed form
///   s_j = 2^(-N/2) sum_a (-1)^{z.(a^x)} |a^x>_A |a>_B
/// where x and z are Alice-register masks of the X and Z exponents.
inline std::vector<Complex> basis_overlaps(const Ket &k, int n) {
    detail::check_register(k, n);
    detail::check_pairs(n, kMaxEnumerationPairs, "basis_overlaps");
    const auto un = static_cast<std::size_t>(n);
    const std::size_t half = std::size_t{1} << un;
    const double weight = 1.0 / std::sqrt(static_cast<double>(half));
    std::vector<Complex> out(detail::message_count(n));
    for (Message j = 0; j < out.size(); ++j) {
        std::size_t xmask = 0, zmask = 0;
        for (std::size_t q = 0; q < un; ++q) {
            const std::size_t bit = std::size_t{1} << (un - 1 - q);
            if ((j >> (2 * q)) & 1u) {
                zmask |= bit;
            }
            if ((j >> (2 * q + 1)) & 1u) {
                xmask |= bit;
            }
        }
        Complex acc = 0.0;
        for (std::size_t a = 0; a < half; ++a) {
            const std::size_t alice = a ^ xmask;
            const double sign = (std::popcount(zmask & alice) & 1) ? -1.0 : 1.0;
            acc += sign * k[(alice << un) | a];
        }
        out[j] = weight * acc;
    }
    return out;
}

/// |<s_j|k>|^2 for every j.
inline std::vector<double> outcome_probabilities(const Ket &k, int n) {
    auto overlaps = basis_overlaps(k, n);
    std::vector<double> p(overlaps.size());
    double total = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        p[j] = std::norm(overlaps[j]);
        total += p[j];
    }
    if (std::abs(total - 1.0) > kEigenTolerance) {
        throw std::invalid_argument("measurement probabilities sum to " + std::to_string(total) +
                                    "; input is not normalized");
    }
    return p;
}

struct MeasurementOutcome {
    Message index = 0;
    double probability = 0.0;
    friend bool operator==(const MeasurementOutcome &, const MeasurementOutcome &) = default;
};

/// Samples one generalized-Bell outcome by inverse CDF over ascending index.
inline MeasurementOutcome measure_generalized_bell(const Ket &k, int n, std::mt19937_64 &rng) {
    const auto p = outcome_probabilities(k, n);
    const double u = detail::unit_interval(rng);
    double cumulative = 0.0;
    Message last_nonzero = 0;
    for (Message j = 0; j < p.size(); ++j) {
        if (p[j] <= 0.0) {
            continue;
        }
        last_nonzero = j;
        cumulative += p[j];
        if (u < cumulative) {
            return {j, p[j]};
        }
    }
    // u landed in the rounding gap above the final cumulative sum.
    return {last_nonzero, p[last_nonzero]};
}

inline MeasurementOutcome measure_generalized_bell(const Ket &k, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure_generalized_bell(k, n, rng);
}

/// Deterministic readout of a state known to be a generalized Bell state.
inline Message decode(const Ket &k, int n) {
    const auto overlaps = basis_overlaps(k, n);
    Message best = 0;
    double best_p = -1.0;
    for (Message j = 0; j < overlaps.size(); ++j) {
        const double p = std::norm(overlaps[j]);
        if (p > best_p) {
            best_p = p;
            best = j;
        }
    }
    if (best_p < kDecodeThreshold) {
        throw NotABasisState("state is not a generalized Bell state (best overlap probability " +
                             std::to_string(best_p) + ")");
    }
    return best;
}

// ---------------------------------------------------------------------------
// Four-bit convention agreed for the N=2 protocol
// ---------------------------------------------------------------------------

enum class Convention { Canonical, Table2 };

/// Bits assigned to g1..g16.
inline constexpr std::array<std::string_view, 16> kTable2Bits = {
    "0000", "0001", "0010", "0100", "1000", "0011", "0110", "1100",
    "0101", "1001", "1010", "0111", "1011", "1101", "1110", "1111",
};

inline GIndex table2_encode(std::string_view bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string_view::npos) {
        throw std::invalid_argument("expected a 4-bit string, got '" + std::string(bits) + "'");
    }
    for (std::size_t i = 0; i < kTable2Bits.size(); ++i) {
        if (kTable2Bits[i] == bits) {
            return GIndex(static_cast<int>(i) + 1);
        }
    }
    throw std::logic_error("convention table is not complete");
}

inline std::string table2_decode(GIndex i) { return std::string(kTable2Bits[static_cast<std::size_t>(i.value() - 1)]); }

/// Bit string -> message index. Canonical reads the bits as a binary number
/// (2N bits); Table2 routes through the g-state convention and is N=2 only.
inline Message bits_to_message(std::string_view bits, Convention convention) {
    if (convention == Convention::Table2) {
        return message_of_g_index(table2_encode(bits));
    }
    if (bits.empty() || bits.size() % 2 != 0 || bits.size() > 2 * kMaxBasisPairs ||
        bits.find_first_not_of("01") != std::string_view::npos) {
        throw std::invalid_argument("expected an even-length bit string, got '" + std::string(bits) + "'");
    }
    Message m = 0;
    for (char ch : bits) {
        m = (m << 1) | static_cast<Message>(ch - '0');
    }
    return m;
}

inline std::string message_to_bits(Message m, int n, Convention convention) {
    if (convention == Convention::Table2) {
        if (n != 2) {
            throw std::invalid_argument("the four-bit convention table exists only for N=2");
        }
        return table2_decode(g_index_of_message(m));
    }
    detail::check_message(m, n);
    std::string out(static_cast<std::size_t>(2 * n), '0');
    for (std::size_t b = 0; b < out.size(); ++b) {
        if ((m >> b) & 1u) {
            out[out.size() - 1 - b] = '1';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive round trip and sessions
// ---------------------------------------------------------------------------

struct RoundtripReport {
    int n = 0;
    std::uint64_t message_count = 0;
    int qubits_per_message = 0;
    double bits_per_qubit = 0.0;
    std::vector<Message> failures;

    bool ok() const { return failures.empty(); }
};

inline RoundtripReport roundtrip_all(int n) {
    detail::check_pairs(n, kMaxEnumerationPairs, "roundtrip_all");
    RoundtripReport report;
    report.n = n;
    report.message_count = detail::message_count(n);
    report.qubits_per_message = n;
    report.bits_per_qubit = static_cast<double>(2 * n) / static_cast<double>(n);
    for (Message m = 0; m < report.message_count; ++m) {
        bool ok = false;
        try {
            ok = decode(encode(m, n), n) == m;
        } catch (const NotABasisState &) {
            ok = false;
        }
        if (!ok) {
            report.failures.push_back(m);
        }
    }
    return report;
}

struct TranscriptStep {
    Message message = 0;
    std::string pauli;  // token form, e.g. "Z1 X2"
    int qubits_transmitted = 0;
    Message outcome = 0;
    bool success = false;
    friend bool operator==(const TranscriptStep &, const TranscriptStep &) = default;
};

struct Transcript {
    int n = 0;
    std::uint64_t seed = kDefaultSeed;
    std::vector<TranscriptStep> steps;
    friend bool operator==(const Transcript &, const Transcript &) = default;
};

/// Simulates one Alice -> Bob exchange per message.
///
/// Each message consumes a freshly prepared s0(N). Alice applies her Pauli
/// string, hands custody of her N qubits to Bob, and Bob samples a
/// generalized Bell measurement from a session-wide PRNG seeded once.
inline Transcript session(int n, std::span<const Message> messages, std::uint64_t seed) {
    detail::check_pairs(n, kMaxEnumerationPairs, "session");
    for (Message m : messages) {
        detail::check_message(m, n);
    }
    Transcript t;
    t.n = n;
    t.seed = seed;
    std::mt19937_64 rng(seed);
    for (Message m : messages) {
        const Ket shared = s0(n);
        const PauliString op = pauli_string(m, n);
        const Ket sent = op.apply(shared);
        // Custody of qubits 0..N-1 moves to Bob; the joint ket is unchanged.
        const MeasurementOutcome seen = measure_generalized_bell(sent, n, rng);
        t.steps.push_back({m, op.to_tokens(), n, seen.index, seen.index == m});
    }
    return t;
}

}  // namespace superdense
