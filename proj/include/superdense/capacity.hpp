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

// Entropies and dense-coding capacity.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "superdense/bellbasis.hpp"
#include "superdense/statevec.hpp"

namespace superdense {

/// Eigenvalues at or below this are treated as exact zeros in x log x.
inline constexpr double kEntropyClamp = 1e-12;
/// |<a|b>| below this counts as orthogonal when collecting orbits.
inline constexpr double kOrthogonalityThreshold = 1e-8;

/// -sum lambda log2 lambda, in bits.
inline double von_neumann_entropy(const DensityMatrix &m) {
    const auto eigenvalues = hermitian_eigenvalues(m);
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < -kStateTolerance) {
            throw std::invalid_argument("density matrix has a negative eigenvalue " + std::to_string(lambda));
        }
        if (lambda > kEntropyClamp) {
            s -= lambda * std::log2(lambda);
        }
    }
    // Rounding can push a pure state a hair below zero.
    return std::max(0.0, s);
}

/// Maximum classical information carried by a d-dimensional system, log2 d.
inline double holevo_bound(std::int64_t d) {
    if (d < 1) {
        throw std::invalid_argument("Holevo bound needs dimension >= 1");
    }
    return std::log2(static_cast<double>(d));
}

struct CapacityReport {
    std::int64_t d_A = 0;
    double entropy_B = 0.0;
    double entropy_AB = 0.0;
    double chi = 0.0;
    double holevo = 0.0;
};

/// chi = log2 d_A + S(rho_B) - S(rho_AB), with rho_B = Tr_A rho_AB. Alice is
/// the leading d_A factor. `holevo` is log2 of the full joint dimension.
inline CapacityReport dense_coding_capacity(const DensityMatrix &rho_ab, std::int64_t d_a, std::int64_t bob_dims) {
    if (d_a < 1 || bob_dims < 1 || static_cast<std::size_t>(d_a * bob_dims) != rho_ab.dim()) {
        throw std::invalid_argument("dimension mismatch: d_A=" + std::to_string(d_a) + " x bob=" +
                                    std::to_string(bob_dims) + " vs matrix dimension " + std::to_string(rho_ab.dim()));
    }
    const DensityMatrix rho_b =
        trace_out_leading(rho_ab, static_cast<std::size_t>(d_a), static_cast<std::size_t>(bob_dims));
    CapacityReport r;
    r.d_A = d_a;
    r.entropy_B = von_neumann_entropy(rho_b);
    r.entropy_AB = von_neumann_entropy(rho_ab);
    r.chi = std::log2(static_cast<double>(d_a)) + r.entropy_B - r.entropy_AB;
    r.holevo = holevo_bound(d_a * bob_dims);
    return r;
}

/// Pure-state shortcut: S(rho_AB) = 0 exactly and S(rho_B) comes from the
/// reduced state on Bob's qubits only, so no full-size eigensolve is needed.
inline CapacityReport dense_coding_capacity(const Ket &k, std::size_t alice_qubits) {
    if (alice_qubits == 0 || alice_qubits >= k.num_qubits()) {
        throw std::invalid_argument("Alice must hold a nonempty proper subset of the qubits");
    }
    std::vector<QubitIndex> bob;
    for (std::size_t q = alice_qubits; q < k.num_qubits(); ++q) {
        bob.emplace_back(q);
    }
    CapacityReport r;
    r.d_A = std::int64_t{1} << alice_qubits;
    r.entropy_B = von_neumann_entropy(partial_trace(k, bob));
    r.entropy_AB = 0.0;
    r.chi = static_cast<double>(alice_qubits) + r.entropy_B;
    r.holevo = holevo_bound(std::int64_t{1} << k.num_qubits());
    return r;
}

/// Size of a greedily collected set of mutually orthogonal states among all
/// 4^N Alice-local Pauli strings applied to k, in Pauli-string index order.
inline std::size_t orthogonal_orbit_count(const Ket &k, int alice_qubits) {
    detail::check_pairs(alice_qubits, kMaxEnumerationPairs, "orthogonal_orbit_count");
    if (k.num_qubits() != 2 * static_cast<std::size_t>(alice_qubits)) {
        throw std::invalid_argument("orbit count expects a " + std::to_string(2 * alice_qubits) + "-qubit ket");
    }
    std::vector<Ket> collected;
    for (std::uint64_t j = 0; j < detail::message_count(alice_qubits); ++j) {
        Ket image = pauli_string(j, alice_qubits).apply(k);
        bool orthogonal_to_all = true;
        for (const auto &c : collected) {
            if (std::abs(inner(c, image)) >= kOrthogonalityThreshold) {
                orthogonal_to_all = false;
                break;
            }
        }
        if (orthogonal_to_all) {
            collected.push_back(std::move(image));
        }
    }
    return collected.size();
}

}  // namespace superdense
