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

// Dense state-vector and density-matrix kernel.
//
// Qubit 0 is the leftmost symbol in ket notation and the most significant bit
// of the amplitude index, so |q0 q1 ... q(n-1)> lives at index
// q0*2^(n-1) + ... + q(n-1).

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superdense {

using Complex = std::complex<double>;

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kEigenTolerance = 1e-9;
inline constexpr std::size_t kMaxQubits = 26;

namespace detail {

inline void check_qubit_count(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("a ket needs at least one qubit");
    }
    if (n > kMaxQubits) {
        throw std::length_error(
            "ket of " + std::to_string(n) + " qubits exceeds the " + std::to_string(kMaxQubits) + " qubit limit");
    }
}

inline double squared_norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto &a : v) {
        acc += std::norm(a);
    }
    return acc;
}

}  // namespace detail

/// Index of a qubit within a ket.
struct QubitIndex {
    std::size_t value;
    constexpr explicit QubitIndex(std::size_t v) : value(v) {}
    friend constexpr bool operator==(QubitIndex, QubitIndex) = default;
};

/// A normalized pure state over `num_qubits` qubits.
class Ket {
   public:
    Ket(std::size_t num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
        detail::check_qubit_count(num_qubits_);
        if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
            throw std::invalid_argument(
                "expected " + std::to_string(std::size_t{1} << num_qubits_) + " amplitudes, got " +
                std::to_string(amplitudes_.size()));
        }
        double norm = detail::squared_norm(amplitudes_);
        if (std::abs(norm - 1.0) > kStateTolerance) {
            throw std::invalid_argument("ket is not normalized (squared norm " + std::to_string(norm) + ")");
        }
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static Ket normalized(std::size_t num_qubits, std::vector<Complex> amplitudes) {
        double norm = std::sqrt(detail::squared_norm(amplitudes));
        if (norm == 0.0) {
            throw std::invalid_argument("cannot normalize the zero vector");
        }
        for (auto &a : amplitudes) {
            a /= norm;
        }
        return Ket(num_qubits, std::move(amplitudes));
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm() const { return std::sqrt(detail::squared_norm(amplitudes_)); }

    friend bool operator==(const Ket &, const Ket &) = default;

   private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Square complex matrix, row-major. No physical invariants.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t d) : dim(d), entries(d * d) {}
    ComplexMatrix(std::size_t d, std::vector<Complex> e) : dim(d), entries(std::move(e)) {
        if (entries.size() != dim * dim) {
            throw std::invalid_argument("matrix entry count does not match dimension");
        }
    }

    Complex &operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    /// max |m - m^dagger|
    double hermitian_defect() const {
        double worst = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = r; c < dim; ++c) {
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
            }
        }
        return worst;
    }

    static ComplexMatrix identity(std::size_t d) {
        ComplexMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;
};

/// Hermitian, unit-trace matrix with power-of-two dimension.
///
/// Positivity is not checked on construction because it needs an
/// eigendecomposition; `von_neumann_entropy` rejects negative spectra.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
        if (m_.dim == 0 || !std::has_single_bit(m_.dim)) {
            throw std::invalid_argument("density matrix dimension must be a power of two");
        }
        if (m_.hermitian_defect() > kStateTolerance) {
            throw std::invalid_argument("density matrix is not Hermitian");
        }
        if (std::abs(m_.trace() - 1.0) > kStateTolerance) {
            throw std::invalid_argument("density matrix trace is not 1");
        }
    }

    /// |k><k|
    static DensityMatrix pure(const Ket &k) {
        ComplexMatrix m(k.dim());
        for (std::size_t r = 0; r < k.dim(); ++r) {
            for (std::size_t c = 0; c < k.dim(); ++c) {
                m(r, c) = k[r] * std::conj(k[c]);
            }
        }
        return DensityMatrix(std::move(m));
    }

    std::size_t dim() const { return m_.dim; }
    const ComplexMatrix &matrix() const { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    friend bool operator==(const DensityMatrix &, const DensityMatrix &) = default;

   private:
    ComplexMatrix m_;
};

/// Unitary 2x2 gate, entries row-major.
class OneQubitGate {
   public:
    explicit OneQubitGate(std::array<Complex, 4> entries) : u_(entries) {
        // U^dagger U == I
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                Complex acc = std::conj(u_[r]) * u_[c] + std::conj(u_[2 + r]) * u_[2 + c];
                if (std::abs(acc - (r == c ? 1.0 : 0.0)) > kStateTolerance) {
                    throw std::invalid_argument("gate is not unitary");
                }
            }
        }
    }

    const Complex &operator()(int r, int c) const { return u_[2 * r + c]; }
    const std::array<Complex, 4> &entries() const { return u_; }

    /// Matrix product (*this) * other: `other` acts first.
    OneQubitGate times(const OneQubitGate &other) const {
        const auto &a = u_;
        const auto &b = other.u_;
        return OneQubitGate({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                             a[2] * b[1] + a[3] * b[3]});
    }

    static OneQubitGate identity() { return OneQubitGate({1.0, 0.0, 0.0, 1.0}); }
    static OneQubitGate pauli_x() { return OneQubitGate({0.0, 1.0, 1.0, 0.0}); }
    static OneQubitGate pauli_z() { return OneQubitGate({1.0, 0.0, 0.0, -1.0}); }
    static OneQubitGate pauli_y() { return OneQubitGate({0.0, Complex(0, -1), Complex(0, 1), 0.0}); }

   private:
    std::array<Complex, 4> u_;
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

inline Ket ket_from_bits(std::span<const int> bits) {
    if (bits.empty()) {
        throw std::invalid_argument("ket_from_bits needs at least one bit");
    }
    detail::check_qubit_count(bits.size());
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("bits must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[index] = 1.0;
    return Ket(bits.size(), std::move(amps));
}

inline Ket ket_from_bits(std::initializer_list<int> bits) {
    return ket_from_bits(std::span<const int>(bits.begin(), bits.size()));
}

/// Parses a bit string such as "0101".
inline Ket ket_from_bits(const std::string &bits) {
    std::vector<int> v;
    v.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string may contain only '0' and '1': " + bits);
        }
        v.push_back(ch - '0');
    }
    return ket_from_bits(std::span<const int>(v));
}

/// a (x) b, with a's qubits more significant.
inline Ket tensor(const Ket &a, const Ket &b) {
    detail::check_qubit_count(a.num_qubits() + b.num_qubits());
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return Ket::normalized(a.num_qubits() + b.num_qubits(), std::move(amps));
}

/// k^(x)count
inline Ket tensor_power(const Ket &k, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("tensor power must be at least 1");
    }
    Ket out = k;
    for (std::size_t i = 1; i < count; ++i) {
        out = tensor(out, k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gates and inner products
// ---------------------------------------------------------------------------

inline Ket apply_single_qubit(const Ket &k, QubitIndex q, const OneQubitGate &g) {
    if (q.value >= k.num_qubits()) {
        throw std::out_of_range(
            "qubit " + std::to_string(q.value) + " out of range for a " + std::to_string(k.num_qubits()) + "-qubit ket");
    }
    const std::size_t mask = std::size_t{1} << (k.num_qubits() - 1 - q.value);
    std::vector<Complex> out(k.amplitudes().begin(), k.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const Complex a0 = k[i];
        const Complex a1 = k[i | mask];
        out[i] = g(0, 0) * a0 + g(0, 1) * a1;
        out[i | mask] = g(1, 0) * a0 + g(1, 1) * a1;
    }
    // Unitarity keeps the norm within rounding; renormalize to pin it at 1.
    return Ket::normalized(k.num_qubits(), std::move(out));
}

/// <a|b>, conjugate-linear in a.
inline Complex inner(const Ket &a, const Ket &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of kets with different qubit counts");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

inline bool equal_up_to_global_phase(const Ket &a, const Ket &b, double tol = kStateTolerance) {
    return std::abs(inner(a, b)) >= 1.0 - tol;
}

/// Largest entrywise deviation between `a` and `b` after rotating `b` onto
/// `a`'s global phase.
inline double phase_aligned_deviation(const Ket &a, const Ket &b) {
    Complex overlap = inner(b, a);
    Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Permutation and partial trace
// ---------------------------------------------------------------------------

/// Moves input qubit q to output position perm[q].
inline Ket permute_qubits(const Ket &k, std::span<const std::size_t> perm) {
    const std::size_t n = k.num_qubits();
    if (perm.size() != n) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("qubit permutation is not a bijection");
        }
        seen[p] = true;
    }
    std::vector<Complex> out(k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
        std::size_t j = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if ((i >> (n - 1 - q)) & 1u) {
                j |= std::size_t{1} << (n - 1 - perm[q]);
            }
        }
        out[j] = k[i];
    }
    return Ket(n, std::move(out));
}

inline Ket permute_qubits(const Ket &k, std::initializer_list<std::size_t> perm) {
    return permute_qubits(k, std::span<const std::size_t>(perm.begin(), perm.size()));
}

inline std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t q = 0; q < perm.size(); ++q) {
        inv.at(perm[q]) = q;
    }
    return inv;
}

/// Reduced density matrix on `keep`, kept qubits in ascending order.
inline DensityMatrix partial_trace(const Ket &k, std::span<const QubitIndex> keep) {
    const std::size_t n = k.num_qubits();
    std::vector<bool> kept(n, false);
    for (auto q : keep) {
        if (q.value >= n) {
            throw std::out_of_range("kept qubit index out of range");
        }
        kept[q.value] = true;
    }
    const auto m = static_cast<std::size_t>(std::count(kept.begin(), kept.end(), true));
    if (m == 0 || m == n) {
        throw std::invalid_argument("partial trace needs a nonempty proper subset of qubits to keep");
    }

    // Arrange amplitudes as psi[kept index][traced index].
    const std::size_t dk = std::size_t{1} << m;
    const std::size_t dt = std::size_t{1} << (n - m);
    std::vector<Complex> psi(dk * dt);
    for (std::size_t i = 0; i < k.dim(); ++i) {
        std::size_t ki = 0, ti = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = (i >> (n - 1 - q)) & 1u;
            if (kept[q]) {
                ki = (ki << 1) | bit;
            } else {
                ti = (ti << 1) | bit;
            }
        }
        psi[ki * dt + ti] = k[i];
    }

    ComplexMatrix rho(dk);
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = r; c < dk; ++c) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < dt; ++t) {
                acc += psi[r * dt + t] * std::conj(psi[c * dt + t]);
            }
            rho(r, c) = acc;
            rho(c, r) = std::conj(acc);
        }
    }
    return DensityMatrix(std::move(rho));
}

inline DensityMatrix partial_trace(const Ket &k, std::initializer_list<std::size_t> keep) {
    std::vector<QubitIndex> v;
    for (auto q : keep) {
        v.emplace_back(q);
    }
    return partial_trace(k, v);
}

/// Traces out the leading factor of a (leading_dim x trailing_dim) bipartition.
inline DensityMatrix trace_out_leading(const DensityMatrix &rho, std::size_t leading_dim, std::size_t trailing_dim) {
    if (leading_dim == 0 || trailing_dim == 0 || leading_dim * trailing_dim != rho.dim()) {
        throw std::invalid_argument(
            "bipartition " + std::to_string(leading_dim) + " x " + std::to_string(trailing_dim) +
            " does not match dimension " + std::to_string(rho.dim()));
    }
    ComplexMatrix out(trailing_dim);
    for (std::size_t a = 0; a < leading_dim; ++a) {
        for (std::size_t r = 0; r < trailing_dim; ++r) {
            for (std::size_t c = 0; c < trailing_dim; ++c) {
                out(r, c) += rho(a * trailing_dim + r, a * trailing_dim + c);
            }
        }
    }
    // Force exact Hermiticity so rounding cannot trip the constructor.
    for (std::size_t r = 0; r < trailing_dim; ++r) {
        out(r, r) = out(r, r).real();
        for (std::size_t c = r + 1; c < trailing_dim; ++c) {
            Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
            out(r, c) = avg;
            out(c, r) = std::conj(avg);
        }
    }
    return DensityMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues
// ---------------------------------------------------------------------------

/// Eigenvalues of a Hermitian matrix in descending order, by cyclic complex
/// Jacobi rotations. Sweeps until the off-diagonal Frobenius norm drops
/// below 1e-12.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix &input) {
    if (input.dim == 0) {
        return {};
    }
    if (input.hermitian_defect() > kStateTolerance) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    ComplexMatrix a = input;
    const std::size_t n = a.dim;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    constexpr double kOffTarget = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= kOffTarget; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) {
                    continue;
                }
                // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] zeroes a(p, q).
                const Complex phase = a(p, q) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {  // a <- a J
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * s + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // a <- J^dagger a
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = s * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (off_norm() >= kOffTarget) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a(i, i).real();
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

inline std::vector<double> hermitian_eigenvalues(const DensityMatrix &m) { return hermitian_eigenvalues(m.matrix()); }

}  // namespace superdense
