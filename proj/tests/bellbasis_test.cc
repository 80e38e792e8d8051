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

#include "superdense/bellbasis.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace superdense;

namespace {

using BL = BellLabel;

// Published Bell-pair decomposition of g1..g16.
const std::array<std::pair<BL, BL>, 16> kPublishedPairs = {{
    {BL::PhiPlus, BL::PhiPlus},
    {BL::PhiMinus, BL::PhiPlus},
    {BL::PhiPlus, BL::PhiMinus},
    {BL::PhiMinus, BL::PhiMinus},
    {BL::PhiPlus, BL::PsiPlus},
    {BL::PhiMinus, BL::PsiPlus},
    {BL::PhiPlus, BL::PsiMinus},
    {BL::PhiMinus, BL::PsiMinus},
    {BL::PsiPlus, BL::PhiPlus},
    {BL::PsiMinus, BL::PhiPlus},
    {BL::PsiPlus, BL::PhiMinus},
    {BL::PsiMinus, BL::PhiMinus},
    {BL::PsiPlus, BL::PsiPlus},
    {BL::PsiMinus, BL::PsiPlus},
    {BL::PsiPlus, BL::PsiMinus},
    {BL::PsiMinus, BL::PsiMinus},
}};

// s_j -> g_i for N=2, worked out by hand from the published list of local
// operations with bit 0 = Z1, bit 1 = X1, bit 2 = Z2, bit 3 = X2.
const std::array<int, 16> kHandDerivedSToG = {1, 2, 9, 10, 3, 4, 11, 12, 5, 6, 13, 14, 7, 8, 15, 16};

void expect_gram_identity(const std::vector<Ket> &states, double tol) {
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = 0; b < states.size(); ++b) {
            const Complex g = inner(states[a], states[b]);
            ASSERT_NEAR(std::abs(g - (a == b ? 1.0 : 0.0)), 0.0, tol) << a << "," << b;
        }
    }
}

std::vector<Ket> all_g_states() {
    std::vector<Ket> out;
    for (int i = 1; i <= 16; ++i) {
        out.push_back(g_state(GIndex(i)));
    }
    return out;
}

}  // namespace

TEST(bellbasis, bell_states) {
    const double h = 1.0 / std::sqrt(2.0);
    const Ket phi = bell(BL::PhiPlus);
    EXPECT_NEAR(phi[0].real(), h, 1e-15);
    EXPECT_NEAR(phi[3].real(), h, 1e-15);
    EXPECT_EQ(phi[1], Complex(0.0));
    const Ket psi_minus = bell(BL::PsiMinus);
    EXPECT_NEAR(psi_minus[1].real(), h, 1e-15);
    EXPECT_NEAR(psi_minus[2].real(), -h, 1e-15);
    std::vector<Ket> all;
    for (auto l : kAllBellLabels) {
        all.push_back(bell(l));
    }
    expect_gram_identity(all, 1e-12);
}

TEST(bellbasis, bell_label_names) {
    for (auto l : kAllBellLabels) {
        EXPECT_EQ(bell_label_from_string(to_string(l)), l);
    }
    EXPECT_THROW(bell_label_from_string("Phi"), std::invalid_argument);
}

TEST(bellbasis, g_state_coefficients) {
    const Ket g1 = g_state(GIndex(1));
    for (std::size_t i = 0; i < 16; ++i) {
        const bool on = i == 0b0000 || i == 0b0101 || i == 0b1010 || i == 0b1111;
        EXPECT_NEAR(std::abs(g1[i] - Complex(on ? 0.5 : 0.0)), 0.0, 1e-15) << i;
    }
    const Ket g12 = g_state(GIndex(12));
    EXPECT_DOUBLE_EQ(g12[0b0010].real(), 0.5);
    EXPECT_DOUBLE_EQ(g12[0b0111].real(), -0.5);
    EXPECT_DOUBLE_EQ(g12[0b1000].real(), -0.5);
    EXPECT_DOUBLE_EQ(g12[0b1101].real(), 0.5);
    expect_gram_identity(all_g_states(), 1e-10);
}

TEST(bellbasis, g_index_range) {
    EXPECT_THROW(GIndex(0), std::out_of_range);
    EXPECT_THROW(GIndex(17), std::out_of_range);
    EXPECT_EQ(GIndex(12).group(), 3);
}

TEST(bellbasis, s0) {
    EXPECT_LT(phase_aligned_deviation(s0(1), bell(BL::PhiPlus)), 1e-15);
    EXPECT_LT(phase_aligned_deviation(s0(2), g_state(GIndex(1))), 1e-15);

    // Enumerate all 64 indices: nonzero iff Alice bits equal Bob bits.
    const Ket k = s0(3);
    const double w = std::pow(2.0, -1.5);
    int nonzero = 0;
    for (std::size_t i = 0; i < 64; ++i) {
        const bool match = (i >> 3) == (i & 7u);
        EXPECT_NEAR(std::abs(k[i] - Complex(match ? w : 0.0)), 0.0, 1e-15);
        nonzero += match ? 1 : 0;
    }
    EXPECT_EQ(nonzero, 8);

    EXPECT_THROW(s0(0), std::out_of_range);
    EXPECT_THROW(s0(14), std::out_of_range);
}

TEST(bellbasis, pauli_string) {
    EXPECT_TRUE(pauli_string(0, 3).is_identity());

    const PauliString two = pauli_string(2, 2);
    EXPECT_EQ(two[0], (PauliFactor{false, true}));
    EXPECT_EQ(two[1], (PauliFactor{false, false}));
    EXPECT_LT(phase_aligned_deviation(two.apply(g_state(GIndex(1))), g_state(GIndex(9))), 1e-12);

    const PauliString three = pauli_string(3, 2);
    EXPECT_EQ(three[0], (PauliFactor{true, true}));
    EXPECT_LT(phase_aligned_deviation(three.apply(g_state(GIndex(1))), g_state(GIndex(10))), 1e-12);

    EXPECT_THROW(pauli_string(16, 2), std::out_of_range);
    EXPECT_THROW(pauli_string(0, 0), std::out_of_range);
}

TEST(bellbasis, pauli_tokens) {
    EXPECT_EQ(pauli_string(0, 2).to_tokens(), "");
    EXPECT_EQ(pauli_string(3, 2).to_tokens(), "Z1 X1");
    EXPECT_EQ(pauli_string(0b1110, 2).to_tokens(), "X1 Z2 X2");

    for (std::uint64_t j = 0; j < 64; ++j) {
        const auto p = pauli_string(j, 3);
        EXPECT_EQ(PauliString::from_tokens(p.to_tokens(), 3), p);
    }
    EXPECT_THROW(PauliString::from_tokens("X1 Z1", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_tokens("Z3", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_tokens("Y1", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_tokens("Z2 Z1", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_tokens("Z0", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_tokens("Zx", 2), std::invalid_argument);
}

TEST(bellbasis, s_state_matches_g_states) {
    EXPECT_LT(phase_aligned_deviation(s_state(0, 2), g_state(GIndex(1))), 1e-12);
    EXPECT_LT(phase_aligned_deviation(s_state(1, 2), g_state(GIndex(2))), 1e-12);
    for (std::uint64_t j = 0; j < 16; ++j) {
        const GIndex expected(kHandDerivedSToG[j]);
        EXPECT_TRUE(equal_up_to_global_phase(s_state(j, 2), g_state(expected))) << "s" << j;
        EXPECT_EQ(g_index_of_message(j), expected) << "s" << j;
        EXPECT_EQ(message_of_g_index(expected), j);
    }
    EXPECT_THROW(s_state(16, 2), std::out_of_range);
}

TEST(bellbasis, s_basis_orthonormal_up_to_n4) {
    for (int n = 1; n <= 4; ++n) {
        expect_gram_identity(s_basis(n), 1e-10);
    }
}

TEST(bellbasis, s_basis_complete_up_to_n3) {
    for (int n = 1; n <= 3; ++n) {
        const auto basis = s_basis(n);
        const std::size_t d = basis.front().dim();
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                Complex sum = 0.0;
                for (const auto &s : basis) {
                    sum += s[r] * std::conj(s[c]);
                }
                ASSERT_NEAR(std::abs(sum - (r == c ? 1.0 : 0.0)), 0.0, 1e-10);
            }
        }
    }
}

TEST(bellbasis, s_states_are_maximally_mixed_on_alice) {
    for (int n = 1; n <= 3; ++n) {
        const auto d = std::size_t{1} << n;
        std::vector<QubitIndex> alice;
        for (int q = 0; q < n; ++q) {
            alice.emplace_back(static_cast<std::size_t>(q));
        }
        for (const auto &s : s_basis(n)) {
            const auto rho = partial_trace(s, alice);
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    ASSERT_NEAR(std::abs(rho(r, c) - (r == c ? 1.0 / static_cast<double>(d) : 0.0)), 0.0, 1e-10);
                }
            }
        }
    }
}

TEST(bellbasis, ghz_family) {
    const double h = 1.0 / std::sqrt(2.0);
    const Ket ghz = ghz_family(GhzLabel::GhzPlus);
    EXPECT_NEAR(ghz[0b0000].real(), h, 1e-15);
    EXPECT_NEAR(ghz[0b1111].real(), h, 1e-15);
    const Ket zm = ghz_family(GhzLabel::ZMinus);
    EXPECT_NEAR(zm[0b1100].real(), h, 1e-15);
    EXPECT_NEAR(zm[0b0011].real(), -h, 1e-15);
    std::vector<Ket> all;
    for (auto l : kAllGhzLabels) {
        all.push_back(ghz_family(l));
    }
    expect_gram_identity(all, 1e-10);
}

TEST(bellbasis, ghz_orbit_closure) {
    std::vector<Ket> family;
    for (auto l : kAllGhzLabels) {
        family.push_back(ghz_family(l));
    }
    const Ket ghz = ghz_family(GhzLabel::GhzPlus);
    for (std::uint64_t j = 0; j < 16; ++j) {
        const Ket image = pauli_string(j, 2).apply(ghz);
        double weight = 0.0;
        for (const auto &f : family) {
            weight += std::norm(inner(f, image));
        }
        EXPECT_NEAR(weight, 1.0, 1e-10) << "pauli " << j;
    }
}

TEST(bellbasis, factorize_examples) {
    EXPECT_EQ(factorize(GIndex(1)), std::make_pair(BL::PhiPlus, BL::PhiPlus));
    EXPECT_EQ(factorize(GIndex(8)), std::make_pair(BL::PhiMinus, BL::PsiMinus));
    EXPECT_EQ(factorize(GIndex(14)), std::make_pair(BL::PsiMinus, BL::PsiPlus));
}

TEST(bellbasis, factorize_reproduces_published_pairs) {
    for (int i = 1; i <= 16; ++i) {
        const auto report = factorize_report(GIndex(i));
        EXPECT_EQ(std::make_pair(report.first, report.second), kPublishedPairs[i - 1]) << "g" << i;
        EXPECT_LE(report.max_deviation, 1e-10);
        const Ket rebuilt = tensor(bell(report.first), bell(report.second));
        EXPECT_TRUE(equal_up_to_global_phase(rebuilt, permute_qubits(g_state(GIndex(i)), {0, 2, 1, 3})));
    }
}

TEST(bellbasis, factorize_s0) {
    const auto one = factorize_s0(1);
    EXPECT_TRUE(one.pass);
    EXPECT_EQ(one.max_deviation, 0.0);
    for (int n = 2; n <= 6; ++n) {
        const auto r = factorize_s0(n);
        EXPECT_TRUE(r.pass) << n;
        EXPECT_LE(r.max_deviation, 1e-10);
    }
    EXPECT_THROW(factorize_s0(0), std::out_of_range);
    EXPECT_THROW(factorize_s0(7), std::out_of_range);
}

TEST(bellbasis, factorize_s0_brute_force_n3) {
    // Amplitude comparison after interleaving, without tensor_power.
    const Ket reordered = permute_qubits(s0(3), interleaving_permutation(3));
    const double w = std::pow(2.0, -1.5);
    for (std::size_t i = 0; i < 64; ++i) {
        // Pairs (0,1), (2,3), (4,5) must each read 00 or 11.
        bool pairs_equal = true;
        for (int p = 0; p < 3; ++p) {
            const auto a = (i >> (5 - 2 * p)) & 1u;
            const auto b = (i >> (4 - 2 * p)) & 1u;
            pairs_equal = pairs_equal && a == b;
        }
        EXPECT_NEAR(std::abs(reordered[i] - Complex(pairs_equal ? w : 0.0)), 0.0, 1e-12) << i;
    }
}
