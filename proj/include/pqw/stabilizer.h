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

#ifndef PQW_STABILIZER_H
#define PQW_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqw/statevector.h"

namespace pqw {

/// A Pauli product i^k * P_0 (x) P_1 (x) ... with bit-packed X and Z masks.
///
/// Per qubit, (x, z) = (1, 0) is X, (0, 1) is Z and (1, 1) is Y (the Hermitian
/// Y, not XZ). The scalar is tracked as a power of i so that arbitrary products
/// stay exact; elements of a stabiliser group always end up with k in {0, 2}.
class PauliString {
   public:
    /// The identity on `num_qubits` qubits.
    explicit PauliString(std::size_t num_qubits);

    /// Parses e.g. "+XZ_Y", "-ZZ", "iX". '_' and 'I' both mean identity. Character k is qubit k.
    static PauliString from_str(std::string_view text);

    /// One non-identity factor ('X', 'Y' or 'Z') at `qubit`.
    static PauliString single(std::size_t num_qubits, std::size_t qubit, char pauli);

    std::size_t num_qubits() const {
        return num_qubits_;
    }

    bool x(std::size_t qubit) const;
    bool z(std::size_t qubit) const;
    void set(std::size_t qubit, bool x, bool z);

    /// 'I', 'X', 'Y' or 'Z'.
    char pauli_at(std::size_t qubit) const;

    /// Exponent k of the i^k scalar, in 0..3.
    std::uint8_t log_i() const {
        return log_i_;
    }
    bool is_hermitian() const {
        return (log_i_ & 1) == 0;
    }

    /// +1 or -1. Throws std::logic_error when the scalar is +-i.
    int sign() const;
    void negate() {
        log_i_ ^= 2;
    }

    /// Right-multiplies: *this = *this * rhs.
    PauliString &operator*=(const PauliString &rhs);

    bool commutes_with(const PauliString &other) const;

    /// Equal operators ignoring the scalar.
    bool same_paulis(const PauliString &other) const;
    bool is_identity() const;
    std::size_t weight() const;

    bool operator==(const PauliString &other) const = default;

    /// Sign character followed by one letter per qubit, '_' for identity.
    std::string str() const;

    /// The factors on `qubits`, in that order, keeping the scalar.
    PauliString restricted(std::span<const std::size_t> qubits) const;

    std::span<const std::uint64_t> x_words() const {
        return xs_;
    }
    std::span<const std::uint64_t> z_words() const {
        return zs_;
    }

    /// Conjugates in place: P -> U P U^dagger.
    void conjugate_by(Gate gate, std::span<const std::size_t> targets);

   private:
    void check_qubit(std::size_t qubit) const;
    bool flip(std::size_t qubit, bool x, bool z);

    std::size_t num_qubits_ = 0;
    std::uint8_t log_i_ = 0;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

PauliString operator*(PauliString lhs, const PauliString &rhs);

/// Value-returning conjugation U P U^dagger.
PauliString conjugate(PauliString pauli, Gate gate, std::span<const std::size_t> targets);

/// Stabiliser generators of a pure n-qubit stabiliser state.
///
/// Generators are kept Hermitian, pairwise commuting and independent. There is
/// no destabiliser half: measurements take a forced outcome and the caller owns
/// outcome enumeration.
class Tableau {
   public:
    /// |0...0>, generators +Z_k.
    explicit Tableau(std::size_t num_qubits);

    /// |+...+>, generators +X_k.
    static Tableau plus_state(std::size_t num_qubits);

    /// Validates commutation, Hermiticity and GF(2) independence.
    static Tableau from_generators(std::vector<PauliString> generators);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<PauliString> &generators() const {
        return generators_;
    }

    void apply(Gate gate, std::span<const std::size_t> targets);
    void apply(Gate gate, std::size_t qubit);
    void apply(Gate gate, std::size_t a, std::size_t b);

    /// Projects onto Z_qubit = (-1)^outcome. Throws ZeroProbabilityError when the
    /// group already contains the opposite eigenvalue.
    void measure_z(std::size_t qubit, bool outcome);

    /// Measures with a uniformly random bit when the outcome is not determined.
    template <typename Rng>
    bool measure_z_sampled(std::size_t qubit, Rng &rng) {
        std::optional<bool> fixed = deterministic_z(qubit);
        bool outcome = fixed.has_value() ? *fixed : std::bernoulli_distribution(0.5)(rng);
        measure_z(qubit, outcome);
        return outcome;
    }

    /// The Z_qubit outcome when it is determined by the group.
    std::optional<bool> deterministic_z(std::size_t qubit) const;

    /// Returns s in {+1, -1} such that s * target lies in the group, or nothing
    /// when neither +target nor -target does.
    std::optional<int> extract_sign(const PauliString &target) const;

    /// Drops every qubit not in `kept`. The dropped qubits must be unentangled
    /// from the rest (e.g. already measured); throws std::invalid_argument otherwise.
    Tableau reduce_to(std::span<const std::size_t> kept) const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliString> generators_;
};

/// Value-returning forms of Tableau::apply and Tableau::measure_z.
Tableau conjugate(Tableau tableau, Gate gate, std::span<const std::size_t> targets);
Tableau measure_z(Tableau tableau, std::size_t qubit, bool forced_outcome);

/// Rank over GF(2) of the concatenated x|z bit rows.
std::size_t gf2_rank(const std::vector<PauliString> &rows);

/// Dense action of a Pauli product (register of at most 64 qubits).
StateVector apply_pauli(const StateVector &state, const PauliString &pauli);

/// True iff every generator maps `state` to itself within `tolerance` (max-abs amplitude error).
bool check_stabilizes(const StateVector &state, const Tableau &tableau, double tolerance = 1e-10);

}  // namespace pqw

#endif
