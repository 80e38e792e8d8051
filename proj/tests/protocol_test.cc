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

#include "superdense/protocol.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace superdense;

TEST(protocol, encode) {
    EXPECT_EQ(encode(0, 3), s0(3));
    EXPECT_TRUE(equal_up_to_global_phase(encode(2, 2), g_state(GIndex(9))));
    for (Message a = 0; a < 16; ++a) {
        for (Message b = 0; b < 16; ++b) {
            EXPECT_NEAR(std::abs(inner(encode(a, 2), encode(b, 2))), a == b ? 1.0 : 0.0, 1e-12);
        }
    }
    EXPECT_EQ(encode(37, 3), s_state(37, 3));
    EXPECT_THROW(encode(16, 2), std::out_of_range);
}

// The closed-form overlaps must agree with explicit inner products against
// the gate-built basis.
TEST(protocol, basis_overlaps_match_explicit_inner_products) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 3; ++n) {
        const auto basis = s_basis(n);
        for (int trial = 0; trial < 5; ++trial) {
            const Ket k = test_support::random_ket(2 * static_cast<std::size_t>(n), rng);
            const auto fast = basis_overlaps(k, n);
            ASSERT_EQ(fast.size(), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                EXPECT_NEAR(std::abs(fast[j] - inner(basis[j], k)), 0.0, 1e-12) << "N=" << n << " j=" << j;
            }
        }
    }
}

TEST(protocol, measure_basis_state_is_certain) {
    const Message g7 = message_of_g_index(GIndex(7));
    const auto outcome = measure_generalized_bell(g_state(GIndex(7)), 2, 99);
    EXPECT_EQ(outcome.index, g7);
    EXPECT_NEAR(outcome.probability, 1.0, 1e-10);
    for (int n = 1; n <= 3; ++n) {
        for (Message j = 0; j < (Message{1} << (2 * n)); ++j) {
            const auto o = measure_generalized_bell(s_state(j, n), n, 1000 + j);
            EXPECT_EQ(o.index, j);
            EXPECT_NEAR(o.probability, 1.0, 1e-10);
        }
    }
}

TEST(protocol, measure_product_state) {
    // |0000> = (g1 + g2 + g3 + g4) / 2; the allowed outcomes come from brute
    // force inner products with the four Group 1 states.
    const Ket zero = ket_from_bits({0, 0, 0, 0});
    std::set<Message> allowed;
    for (int i = 1; i <= 4; ++i) {
        EXPECT_NEAR(std::norm(inner(g_state(GIndex(i)), zero)), 0.25, 1e-12);
        allowed.insert(message_of_g_index(GIndex(i)));
    }
    EXPECT_EQ(allowed, (std::set<Message>{0, 1, 4, 5}));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto o = measure_generalized_bell(zero, 2, seed);
        EXPECT_TRUE(allowed.contains(o.index));
        EXPECT_NEAR(o.probability, 0.25, 1e-12);
    }
}

TEST(protocol, measure_is_deterministic_for_seed) {
    std::mt19937_64 rng(5);
    const Ket k = test_support::random_ket(4, rng);
    const auto a = measure_generalized_bell(k, 2, 12345);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(measure_generalized_bell(k, 2, 12345), a);
    }
}

TEST(protocol, measure_rejects_wrong_register) {
    EXPECT_THROW(measure_generalized_bell(ket_from_bits({0, 0, 0}), 2, 1), std::invalid_argument);
    EXPECT_THROW(decode(ket_from_bits({0, 0}), 2), std::invalid_argument);
}

TEST(protocol, probabilities_are_normalized) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = outcome_probabilities(test_support::random_ket(4, rng), 2);
        EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
    }
}

TEST(protocol, sampling_frequencies) {
    const Ket zero = ket_from_bits({0, 0, 0, 0});
    std::mt19937_64 rng(kDefaultSeed);
    std::map<Message, int> counts;
    constexpr int kSamples = 40000;
    for (int i = 0; i < kSamples; ++i) {
        ++counts[measure_generalized_bell(zero, 2, rng).index];
    }
    EXPECT_EQ(counts.size(), 4u);
    for (Message m : {0, 1, 4, 5}) {
        EXPECT_NEAR(counts[m] / static_cast<double>(kSamples), 0.25, 0.02) << m;
    }
}

TEST(protocol, decode) {
    for (Message m = 0; m < 16; ++m) {
        EXPECT_EQ(decode(encode(m, 2), 2), m);
    }
    EXPECT_EQ(decode(g_state(GIndex(1)), 2), 0u);
    EXPECT_THROW(decode(ket_from_bits({0, 0, 0, 0}), 2), NotABasisState);

    // A global phase does not change the readout.
    const Ket s = s_state(11, 2);
    std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
    for (auto &a : rotated) {
        a *= std::polar(1.0, 0.7);
    }
    EXPECT_EQ(decode(Ket(4, rotated), 2), 11u);
}

TEST(protocol, roundtrip_identity_up_to_n5) {
    for (int n = 1; n <= 5; ++n) {
        for (Message m = 0; m < (Message{1} << (2 * n)); ++m) {
            ASSERT_EQ(decode(encode(m, n), n), m) << "N=" << n;
        }
    }
}

TEST(protocol, roundtrip_all) {
    const auto one = roundtrip_all(1);
    EXPECT_EQ(one.message_count, 4u);
    EXPECT_EQ(one.qubits_per_message, 1);
    EXPECT_EQ(one.bits_per_qubit, 2.0);
    EXPECT_TRUE(one.ok());
    const auto two = roundtrip_all(2);
    EXPECT_EQ(two.message_count, 16u);
    EXPECT_EQ(two.bits_per_qubit, 2.0);
    EXPECT_TRUE(two.ok());
    const auto five = roundtrip_all(5);
    EXPECT_EQ(five.message_count, 1024u);
    EXPECT_TRUE(five.failures.empty());
    EXPECT_THROW(roundtrip_all(0), std::out_of_range);
    EXPECT_THROW(roundtrip_all(7), std::out_of_range);
}

TEST(protocol, table2) {
    EXPECT_EQ(table2_encode("0000"), GIndex(1));
    EXPECT_EQ(table2_decode(GIndex(7)), "0110");
    EXPECT_EQ(table2_encode("1100"), GIndex(8));
    std::set<std::string> seen;
    for (int b = 0; b < 16; ++b) {
        std::string bits;
        for (int k = 3; k >= 0; --k) {
            bits += ((b >> k) & 1) ? '1' : '0';
        }
        EXPECT_EQ(table2_decode(table2_encode(bits)), bits);
        seen.insert(table2_decode(GIndex(b + 1)));
    }
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_THROW(table2_encode("010"), std::invalid_argument);
    EXPECT_THROW(table2_encode("01a0"), std::invalid_argument);
}

TEST(protocol, convention_consistency) {
    std::set<Message> messages;
    for (int b = 0; b < 16; ++b) {
        const std::string bits = message_to_bits(static_cast<Message>(b), 2, Convention::Canonical);
        const Message m = bits_to_message(bits, Convention::Table2);
        messages.insert(m);
        EXPECT_EQ(message_to_bits(m, 2, Convention::Table2), bits);
        // Decoding the encoded state recovers the agreed bits.
        EXPECT_EQ(message_to_bits(decode(encode(m, 2), 2), 2, Convention::Table2), bits);
    }
    EXPECT_EQ(messages.size(), 16u);

    EXPECT_EQ(bits_to_message("0101", Convention::Canonical), 5u);
    EXPECT_EQ(message_to_bits(5, 3, Convention::Canonical), "000101");
    EXPECT_THROW(bits_to_message("101", Convention::Canonical), std::invalid_argument);
    EXPECT_THROW(message_to_bits(5, 3, Convention::Table2), std::invalid_argument);
}

TEST(protocol, session) {
    const std::vector<Message> msgs = {5, 0, 15};
    const Transcript t = session(2, msgs, 77);
    ASSERT_EQ(t.steps.size(), 3u);
    EXPECT_EQ(t.n, 2);
    EXPECT_EQ(t.seed, 77u);
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        EXPECT_EQ(t.steps[i].message, msgs[i]);
        EXPECT_EQ(t.steps[i].outcome, msgs[i]);
        EXPECT_TRUE(t.steps[i].success);
        EXPECT_EQ(t.steps[i].qubits_transmitted, 2);
        EXPECT_EQ(t.steps[i].pauli, pauli_string(msgs[i], 2).to_tokens());
    }
    EXPECT_EQ(t.steps[2].pauli, "Z1 X1 Z2 X2");

    const std::vector<Message> bw = {0, 1, 2, 3};
    const Transcript original = session(1, bw, kDefaultSeed);
    ASSERT_EQ(original.steps.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(original.steps[i].outcome, bw[i]);
        EXPECT_EQ(original.steps[i].qubits_transmitted, 1);
    }

    EXPECT_TRUE(session(3, std::vector<Message>{}, 1).steps.empty());
    EXPECT_THROW(session(2, std::vector<Message>{16}, 1), std::out_of_range);
    EXPECT_EQ(session(2, msgs, 77), t);
}
