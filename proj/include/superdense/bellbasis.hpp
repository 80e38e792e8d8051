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

// Bell states, the sixteen four-qubit generalized Bell states, the 2N-qubit
// generalized basis |s_j>, the four-qubit GHZ family, and Bell-pair
// factorizations.
//
// Layout convention: Alice holds qubits 0..N-1 and Bob holds N..2N-1.

#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superdense/statevec.hpp"

namespace superdense {

inline constexpr int kMaxBasisPairs = 13;       // 2N <= kMaxQubits
inline constexpr int kMaxEnumerationPairs = 6;  // full 2^(2N) enumeration

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus};

inline std::string_view to_string(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus:
            return "PhiPlus";
        case BellLabel::PhiMinus:
            return "PhiMinus";
        case BellLabel::PsiPlus:
            return "PsiPlus";
        case BellLabel::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

/// Ket-notation symbol, e.g. "Φ+".
inline std::string_view symbol(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus:
            return "Φ+";
        case BellLabel::PhiMinus:
            return "Φ-";
        case BellLabel::PsiPlus:
            return "Ψ+";
        case BellLabel::PsiMinus:
            return "Ψ-";
    }
    return "?";
}

inline BellLabel bell_label_from_string(std::string_view name) {
    for (auto label : kAllBellLabels) {
        if (name == to_string(label)) {
            return label;
        }
    }
    throw std::invalid_argument("unknown Bell label: " + std::string(name));
}

enum class GhzLabel { GhzPlus, GhzMinus, GPlus, GMinus, HPlus, HMinus, ZPlus, ZMinus };

inline constexpr std::array<GhzLabel, 8> kAllGhzLabels = {GhzLabel::GhzPlus, GhzLabel::GhzMinus, GhzLabel::GPlus,
                                                          GhzLabel::GMinus,  GhzLabel::HPlus,    GhzLabel::HMinus,
                                                          GhzLabel::ZPlus,   GhzLabel::ZMinus};

inline std::string_view to_string(GhzLabel label) {
    constexpr std::array<std::string_view, 8> names = {"GHZ+", "GHZ-", "G+", "G-", "H+", "H-", "Z+", "Z-"};
    return names[static_cast<std::size_t>(label)];
}

/// Index 1..16 of a four-qubit generalized Bell state g_i.
class GIndex {
   public:
    constexpr explicit GIndex(int value) : value_(value) {
        if (value < 1 || value > 16) {
            throw std::out_of_range("g-state index must be in [1, 16], got " + std::to_string(value));
        }
    }
    constexpr int value() const { return value_; }
    /// Group 1..4 in the published layout (four consecutive states each).
    constexpr int group() const { return (value_ - 1) / 4 + 1; }
    friend constexpr bool operator==(GIndex, GIndex) = default;
    friend constexpr auto operator<=>(GIndex, GIndex) = default;

   private:
    int value_;
};

// ---------------------------------------------------------------------------
// Pauli strings
// ---------------------------------------------------------------------------

/// (sigma^z)^z (sigma^x)^x on one qubit; X acts before Z.
struct PauliFactor {
    bool z = false;
    bool x = false;
    friend bool operator==(PauliFactor, PauliFactor) = default;
};

/// Product of per-qubit PauliFactors on qubits 0..n-1.
class PauliString {
   public:
    explicit PauliString(std::vector<PauliFactor> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) {
            throw std::invalid_argument("a Pauli string needs at least one factor");
        }
    }

    static PauliString identity(std::size_t n) { return PauliString(std::vector<PauliFactor>(n)); }

    /// Parses whitespace-separated `Z<k>` / `X<k>` tokens with 1-indexed k.
    /// Per qubit, a Z token must precede the X token. Empty text is identity.
    static PauliString from_tokens(std::string_view text, std::size_t n) {
        auto out = identity(n);
        std::istringstream in{std::string(text)};
        std::string tok;
        std::size_t last_qubit = 0;
        bool last_was_x = false;
        while (in >> tok) {
            if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'X')) {
                throw std::invalid_argument("malformed Pauli token: " + tok);
            }
            std::size_t k = 0;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9') {
                    throw std::invalid_argument("malformed Pauli token: " + tok);
                }
                k = k * 10 + static_cast<std::size_t>(tok[i] - '0');
                if (k > n) {
                    break;
                }
            }
            if (k < 1 || k > n) {
                throw std::invalid_argument("Pauli token qubit out of range: " + tok);
            }
            const bool is_x = tok[0] == 'X';
            if (k < last_qubit || (k == last_qubit && (last_was_x || !is_x))) {
                throw std::invalid_argument("Pauli tokens out of canonical order at: " + tok);
            }
            auto &f = out.factors_[k - 1];
            (is_x ? f.x : f.z) = true;
            last_qubit = k;
            last_was_x = is_x;
        }
        return out;
    }

    std::size_t size() const { return factors_.size(); }
    const PauliFactor &operator[](std::size_t q) const { return factors_[q]; }
    const std::vector<PauliFactor> &factors() const { return factors_; }

    bool is_identity() const {
        for (auto f : factors_) {
            if (f.x || f.z) {
                return false;
            }
        }
        return true;
    }

    /// "Z1 X1 X2" style rendering; identity renders as "".
    std::string to_tokens() const {
        std::string out;
        auto emit = [&](char p, std::size_t k) {
            if (!out.empty()) {
                out += ' ';
            }
            out += p;
            out += std::to_string(k);
        };
        for (std::size_t q = 0; q < factors_.size(); ++q) {
            if (factors_[q].z) {
                emit('Z', q + 1);
            }
            if (factors_[q].x) {
                emit('X', q + 1);
            }
        }
        return out;
    }

    /// Applies the string to qubits 0..size()-1 of `k` using single-qubit gates.
    Ket apply(const Ket &k) const {
        if (factors_.size() > k.num_qubits()) {
            throw std::invalid_argument("Pauli string longer than the ket it acts on");
        }
        Ket out = k;
        for (std::size_t q = 0; q < factors_.size(); ++q) {
            if (factors_[q].x) {
                out = apply_single_qubit(out, QubitIndex(q), OneQubitGate::pauli_x());
            }
            if (factors_[q].z) {
                out = apply_single_qubit(out, QubitIndex(q), OneQubitGate::pauli_z());
            }
        }
        return out;
    }

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::vector<PauliFactor> factors_;
};

// ---------------------------------------------------------------------------
// Fixed states
// ---------------------------------------------------------------------------

namespace detail {

/// Builds an equal-weight real superposition from terms like "+0101 -1010".
inline Ket signed_superposition(std::string_view terms) {
    std::istringstream in{std::string(terms)};
    std::string term;
    std::vector<std::pair<double, std::string>> parsed;
    while (in >> term) {
        parsed.emplace_back(term[0] == '-' ? -1.0 : 1.0, term.substr(1));
    }
    const std::size_t n = parsed.front().second.size();
    std::vector<Complex> amps(std::size_t{1} << n);
    const double weight = 1.0 / std::sqrt(static_cast<double>(parsed.size()));
    for (const auto &[sign, bits] : parsed) {
        amps[std::stoul(bits, nullptr, 2)] = sign * weight;
    }
    return Ket(n, std::move(amps));
}

inline void check_pairs(int n, int max, const char *what) {
    if (n < 1 || n > max) {
        throw std::out_of_range(std::string(what) + ": N must be in [1, " + std::to_string(max) + "], got " +
                                std::to_string(n));
    }
}

inline std::uint64_t message_count(int n) { return std::uint64_t{1} << (2 * n); }

}  // namespace detail

inline Ket bell(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus:
            return detail::signed_superposition("+00 +11");
        case BellLabel::PhiMinus:
            return detail::signed_superposition("+00 -11");
        case BellLabel::PsiPlus:
            return detail::signed_superposition("+01 +10");
        case BellLabel::PsiMinus:
            return detail::signed_superposition("+01 -10");
    }
    throw std::invalid_argument("unknown Bell label");
}

/// The sixteen generalized Bell states with their published coefficients.
inline Ket g_state(GIndex i) {
    static constexpr std::array<std::string_view, 16> kTerms = {
        // Group 1
        "+0000 +0101 +1010 +1111",
        "+0000 +0101 -1010 -1111",
        "+0000 -0101 +1010 -1111",
        "+0000 -0101 -1010 +1111",
        // Group 2
        "+0001 +0100 +1011 +1110",
        "+0001 +0100 -1011 -1110",
        "+0001 -0100 +1011 -1110",
        "+0001 -0100 -1011 +1110",
        // Group 3
        "+0010 +0111 +1000 +1101",
        "+0010 +0111 -1000 -1101",
        "+0010 -0111 +1000 -1101",
        "+0010 -0111 -1000 +1101",
        // Group 4
        "+0011 +0110 +1001 +1100",
        "+0011 +0110 -1001 -1100",
        "+0011 -0110 +1001 -1100",
        "+0011 -0110 -1001 +1100",
    };
    return detail::signed_superposition(kTerms[static_cast<std::size_t>(i.value() - 1)]);
}

inline Ket ghz_family(GhzLabel label) {
    static constexpr std::array<std::string_view, 8> kTerms = {
        "+0000 +1111", "+0000 -1111", "+0100 +1011", "+0100 -1011",
        "+1000 +0111", "+1000 -0111", "+1100 +0011", "+1100 -0011",
    };
    return detail::signed_superposition(kTerms[static_cast<std::size_t>(label)]);
}

// ---------------------------------------------------------------------------
// Generalized basis for N pairs
// ---------------------------------------------------------------------------

/// 2^(-N/2) sum_x |x>_A |x>_B over 2N qubits.
inline Ket s0(int n) {
    detail::check_pairs(n, kMaxBasisPairs, "s0");
    const auto un = static_cast<std::size_t>(n);
    const std::size_t half = std::size_t{1} << un;
    std::vector<Complex> amps(half * half);
    const double weight = 1.0 / std::sqrt(static_cast<double>(half));
    for (std::size_t x = 0; x < half; ++x) {
        amps[(x << un) | x] = weight;
    }
    return Ket(2 * un, std::move(amps));
}

/// Alice's encoding string for message j: qubit q (0-indexed) gets
/// z = bit 2q of j and x = bit 2q+1, bits counted from the least significant.
inline PauliString pauli_string(std::uint64_t j, int n) {
    detail::check_pairs(n, kMaxBasisPairs, "pauli_string");
    if (j >= detail::message_count(n)) {
        throw std::out_of_range("message " + std::to_string(j) + " out of range for N=" + std::to_string(n));
    }
    std::vector<PauliFactor> factors(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < factors.size(); ++q) {
        factors[q].z = (j >> (2 * q)) & 1u;
        factors[q].x = (j >> (2 * q + 1)) & 1u;
    }
    return PauliString(std::move(factors));
}

inline Ket s_state(std::uint64_t j, int n) { return pauli_string(j, n).apply(s0(n)); }

/// All 2^(2N) generalized Bell states in message order.
inline std::vector<Ket> s_basis(int n) {
    detail::check_pairs(n, kMaxEnumerationPairs, "s_basis");
    std::vector<Ket> out;
    out.reserve(detail::message_count(n));
    for (std::uint64_t j = 0; j < detail::message_count(n); ++j) {
        out.push_back(s_state(j, n));
    }
    return out;
}

/// For N=2, the g-state matching each s_j up to global phase. Computed once
/// by exhaustive comparison.
inline const std::array<GIndex, 16> &s_to_g_table() {
    static const std::array<GIndex, 16> table = [] {
        std::array<GIndex, 16> t{GIndex(1), GIndex(1), GIndex(1), GIndex(1), GIndex(1), GIndex(1),
                                 GIndex(1), GIndex(1), GIndex(1), GIndex(1), GIndex(1), GIndex(1),
                                 GIndex(1), GIndex(1), GIndex(1), GIndex(1)};
        std::array<bool, 16> used{};
        for (std::uint64_t j = 0; j < 16; ++j) {
            const Ket s = s_state(j, 2);
            bool found = false;
            for (int i = 1; i <= 16 && !found; ++i) {
                if (!used[i - 1] && equal_up_to_global_phase(s, g_state(GIndex(i)))) {
                    t[j] = GIndex(i);
                    used[i - 1] = true;
                    found = true;
                }
            }
            if (!found) {
                throw std::logic_error("s_" + std::to_string(j) + " matches no g-state");
            }
        }
        return t;
    }();
    return table;
}

inline GIndex g_index_of_message(std::uint64_t j) {
    if (j >= 16) {
        throw std::out_of_range("N=2 messages are in [0, 15]");
    }
    return s_to_g_table()[j];
}

inline std::uint64_t message_of_g_index(GIndex i) {
    const auto &t = s_to_g_table();
    for (std::uint64_t j = 0; j < t.size(); ++j) {
        if (t[j] == i) {
            return j;
        }
    }
    throw std::logic_error("s/g table is not a bijection");
}

// ---------------------------------------------------------------------------
// Bell-pair factorization
// ---------------------------------------------------------------------------

struct FactorizationReport {
    int g_index = 0;
    BellLabel first = BellLabel::PhiPlus;
    BellLabel second = BellLabel::PhiPlus;
    double max_deviation = 0.0;
    friend bool operator==(const FactorizationReport &, const FactorizationReport &) = default;
};

/// Swaps qubits 1 and 2 so that each Alice qubit sits next to its Bob partner.
inline Ket pair_adjacent_order(const Ket &g) { return permute_qubits(g, {0, 2, 1, 3}); }

/// Finds the Bell pair whose product equals the reordered g-state, trying
/// all sixteen candidates.
inline FactorizationReport factorize_report(GIndex i) {
    const Ket target = pair_adjacent_order(g_state(i));
    for (auto first : kAllBellLabels) {
        for (auto second : kAllBellLabels) {
            const Ket candidate = tensor(bell(first), bell(second));
            if (equal_up_to_global_phase(target, candidate)) {
                return {i.value(), first, second, phase_aligned_deviation(target, candidate)};
            }
        }
    }
    throw std::logic_error("g" + std::to_string(i.value()) + " is not a product of two Bell states");
}

inline std::pair<BellLabel, BellLabel> factorize(GIndex i) {
    auto r = factorize_report(i);
    return {r.first, r.second};
}

struct S0FactorizationReport {
    int n = 0;
    bool pass = false;
    double max_deviation = 0.0;
};

/// Alice qubit k -> position 2k, Bob qubit N+k -> position 2k+1.
inline std::vector<std::size_t> interleaving_permutation(int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::size_t> perm(2 * un);
    for (std::size_t k = 0; k < un; ++k) {
        perm[k] = 2 * k;
        perm[un + k] = 2 * k + 1;
    }
    return perm;
}

/// Checks s0(N) against |Phi+>^(x)N after interleaving.
inline S0FactorizationReport factorize_s0(int n) {
    detail::check_pairs(n, kMaxEnumerationPairs, "factorize_s0");
    const Ket reordered = permute_qubits(s0(n), interleaving_permutation(n));
    const Ket pairs = tensor_power(bell(BellLabel::PhiPlus), static_cast<std::size_t>(n));
    double worst = 0.0;
    for (std::size_t i = 0; i < reordered.dim(); ++i) {
        worst = std::max(worst, std::abs(reordered[i] - pairs[i]));
    }
    return {n, worst <= kStateTolerance, worst};
}

}  // namespace superdense
