// Copyright 2026 The PQW Authors
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

#ifndef PQW_STATEVECTOR_H
#define PQW_STATEVECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pqw {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}. Not required to be unitary.
using Matrix2 = std::array<Complex, 4>;

enum class Gate : std::uint8_t { H, X, Y, Z, S, CZ, CNOT };

int gate_arity(Gate gate);
std::string_view gate_name(Gate gate);

/// Registers larger than this are refused unless the caller raises the ceiling.
inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Dense pure state on an indexed qubit register.
///
/// Qubit k is the k-th tensor factor and the least significant bits of a basis
/// index belong to the lowest qubits: amplitude i is <b_{n-1} ... b_1 b_0| with
/// b_k = (i >> k) & 1. Every bit manipulation in the library relies on this.
///
/// Gate application mutates the held buffer. Values are cheap to copy and
/// carry no shared state, so copies can be handed to other threads.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits. Throws ResourceError above `max_qubits`.
    explicit StateVector(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxQubits);

    /// |+>^n.
    static StateVector plus(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxQubits);

    /// Wraps raw amplitudes. The length must be a power of two; no normalization is applied.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> mutable_amplitudes() {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    void apply(Gate gate, std::span<const std::size_t> targets);
    void apply(Gate gate, std::size_t qubit);
    void apply(Gate gate, std::size_t a, std::size_t b);

    /// Applies an arbitrary 2x2 operator (e.g. a Kraus operator) to one qubit.
    void apply_matrix(const Matrix2 &m, std::size_t qubit);

    double norm_squared() const;

    /// Rescales to unit norm. Throws ZeroProbabilityError on the zero vector.
    void normalize();

   private:
    StateVector() = default;
    void check_qubit(std::size_t qubit) const;
    void apply_single(Gate gate, std::size_t qubit);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_cnot(std::size_t control, std::size_t target);

    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// |+>^n.
StateVector new_plus(std::size_t num_qubits);

/// Value-returning form of StateVector::apply.
StateVector apply_gate(StateVector state, Gate gate, std::span<const std::size_t> targets);

/// Result of projecting one qubit onto a computational-basis outcome.
struct Projection {
    double probability = 0.0;
    /// Renormalized post-measurement state; empty when the branch has probability zero.
    std::optional<StateVector> state;

    bool valid() const {
        return state.has_value();
    }
};

/// Probabilities at or below this are treated as an impossible branch.
inline constexpr double kZeroProbability = 1e-14;

Projection measure_project(const StateVector &state, std::size_t qubit, bool outcome);

/// |<a|b>|^2. Throws std::invalid_argument on a qubit-count mismatch.
double fidelity(const StateVector &a, const StateVector &b);

/// A split of a register's qubits into two non-empty complementary sides.
class Bipartition {
   public:
    /// Side B is the complement of `side_a` in 0..num_qubits-1.
    static Bipartition from_side_a(std::vector<std::size_t> side_a, std::size_t num_qubits);

    const std::vector<std::size_t> &side_a() const {
        return side_a_;
    }
    const std::vector<std::size_t> &side_b() const {
        return side_b_;
    }
    std::size_t num_qubits() const {
        return side_a_.size() + side_b_.size();
    }

   private:
    std::vector<std::size_t> side_a_;
    std::vector<std::size_t> side_b_;
};

/// Clifford states have singular values bounded below by powers of 1/2.
inline constexpr double kDefaultSchmidtTolerance = 1e-9;

/// Singular values of the coefficient matrix reshaped along the cut, descending.
std::vector<double> schmidt_coefficients(const StateVector &state, const Bipartition &cut);

std::size_t schmidt_rank(
    const StateVector &state, const Bipartition &cut, double tolerance = kDefaultSchmidtTolerance);

}  // namespace pqw

#endif
