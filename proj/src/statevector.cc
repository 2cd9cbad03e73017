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

#include "pqw/statevector.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqw/errors.h"

namespace pqw {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

int gate_arity(Gate gate) {
    switch (gate) {
        case Gate::CZ:
        case Gate::CNOT:
            return 2;
        default:
            return 1;
    }
}

std::string_view gate_name(Gate gate) {
    switch (gate) {
        case Gate::H:
            return "H";
        case Gate::X:
            return "X";
        case Gate::Y:
            return "Y";
        case Gate::Z:
            return "Z";
        case Gate::S:
            return "S";
        case Gate::CZ:
            return "CZ";
        case Gate::CNOT:
            return "CNOT";
    }
    return "?";
}

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("a register needs at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw ResourceError(
            "register of " + std::to_string(num_qubits) + " qubits exceeds the ceiling of " +
            std::to_string(max_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::plus(std::size_t num_qubits, std::size_t max_qubits) {
    StateVector result(num_qubits, max_qubits);
    double a = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    std::fill(result.amplitudes_.begin(), result.amplitudes_.end(), Complex{a, 0.0});
    return result;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector result;
    result.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    result.amplitudes_ = std::move(amplitudes);
    return result;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument(
            "qubit " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) +
            "-qubit register");
    }
}

void StateVector::apply(Gate gate, std::span<const std::size_t> targets) {
    if (targets.size() != static_cast<std::size_t>(gate_arity(gate))) {
        throw std::invalid_argument(
            std::string(gate_name(gate)) + " takes " + std::to_string(gate_arity(gate)) + " target(s)");
    }
    if (targets.size() == 1) {
        apply(gate, targets[0]);
    } else {
        apply(gate, targets[0], targets[1]);
    }
}

void StateVector::apply(Gate gate, std::size_t qubit) {
    if (gate_arity(gate) != 1) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " is a two-qubit gate");
    }
    check_qubit(qubit);
    apply_single(gate, qubit);
}

void StateVector::apply(Gate gate, std::size_t a, std::size_t b) {
    if (gate_arity(gate) != 2) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " is a single-qubit gate");
    }
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " targets must be distinct");
    }
    if (gate == Gate::CZ) {
        apply_cz(a, b);
    } else {
        apply_cnot(a, b);
    }
}

void StateVector::apply_single(Gate gate, std::size_t qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t dim = amplitudes_.size();
    switch (gate) {
        case Gate::H:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & mask) {
                    continue;
                }
                Complex a0 = amplitudes_[i];
                Complex a1 = amplitudes_[i | mask];
                amplitudes_[i] = (a0 + a1) * kInvSqrt2;
                amplitudes_[i | mask] = (a0 - a1) * kInvSqrt2;
            }
            break;
        case Gate::X:
            for (std::size_t i = 0; i < dim; i++) {
                if (!(i & mask)) {
                    std::swap(amplitudes_[i], amplitudes_[i | mask]);
                }
            }
            break;
        case Gate::Y:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & mask) {
                    continue;
                }
                Complex a0 = amplitudes_[i];
                Complex a1 = amplitudes_[i | mask];
                amplitudes_[i] = Complex{0.0, -1.0} * a1;
                amplitudes_[i | mask] = Complex{0.0, 1.0} * a0;
            }
            break;
        case Gate::Z:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & mask) {
                    amplitudes_[i] = -amplitudes_[i];
                }
            }
            break;
        case Gate::S:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & mask) {
                    amplitudes_[i] *= Complex{0.0, 1.0};
                }
            }
            break;
        default:
            throw std::invalid_argument("not a single-qubit gate");
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if ((i & both) == both) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    const std::size_t c = std::size_t{1} << control;
    const std::size_t t = std::size_t{1} << target;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if ((i & c) && !(i & t)) {
            std::swap(amplitudes_[i], amplitudes_[i | t]);
        }
    }
}

void StateVector::apply_matrix(const Matrix2 &m, std::size_t qubit) {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = amplitudes_[i];
        Complex a1 = amplitudes_[i | mask];
        amplitudes_[i] = m[0] * a0 + m[1] * a1;
        amplitudes_[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double n2 = norm_squared();
    if (n2 <= kZeroProbability) {
        throw ZeroProbabilityError("cannot normalize a zero vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    for (Complex &a : amplitudes_) {
        a *= scale;
    }
}

StateVector new_plus(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("new_plus needs at least one qubit");
    }
    return StateVector::plus(num_qubits);
}

StateVector apply_gate(StateVector state, Gate gate, std::span<const std::size_t> targets) {
    state.apply(gate, targets);
    return state;
}

Projection measure_project(const StateVector &state, std::size_t qubit, bool outcome) {
    if (qubit >= state.num_qubits()) {
        throw std::invalid_argument("measured qubit out of range");
    }
    const std::size_t mask = std::size_t{1} << qubit;
    std::vector<Complex> projected(state.amplitudes().begin(), state.amplitudes().end());
    double probability = 0.0;
    for (std::size_t i = 0; i < projected.size(); i++) {
        if (static_cast<bool>(i & mask) == outcome) {
            probability += std::norm(projected[i]);
        } else {
            projected[i] = 0.0;
        }
    }
    Projection result;
    result.probability = probability;
    if (probability > kZeroProbability) {
        double scale = 1.0 / std::sqrt(probability);
        for (Complex &a : projected) {
            a *= scale;
        }
        result.state = StateVector::from_amplitudes(std::move(projected));
    }
    return result;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "fidelity of states with " + std::to_string(a.num_qubits()) + " and " +
            std::to_string(b.num_qubits()) + " qubits");
    }
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); i++) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

Bipartition Bipartition::from_side_a(std::vector<std::size_t> side_a, std::size_t num_qubits) {
    std::sort(side_a.begin(), side_a.end());
    if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end()) {
        throw std::invalid_argument("bipartition side lists a qubit twice");
    }
    if (side_a.empty() || side_a.size() >= num_qubits) {
        throw std::invalid_argument("both sides of a bipartition must be non-empty");
    }
    if (side_a.back() >= num_qubits) {
        throw std::invalid_argument("bipartition qubit out of range");
    }
    Bipartition result;
    result.side_a_ = std::move(side_a);
    for (std::size_t q = 0; q < num_qubits; q++) {
        if (!std::binary_search(result.side_a_.begin(), result.side_a_.end(), q)) {
            result.side_b_.push_back(q);
        }
    }
    return result;
}

namespace {

// Gathers the bits of `index` at `qubits` into a compact integer (qubits[0] lowest).
std::size_t gather_bits(std::size_t index, const std::vector<std::size_t> &qubits) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < qubits.size(); k++) {
        out |= ((index >> qubits[k]) & 1) << k;
    }
    return out;
}

Eigen::MatrixXcd coefficient_matrix(const StateVector &state, const Bipartition &cut) {
    if (cut.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("bipartition does not match the register size");
    }
    const auto rows = static_cast<Eigen::Index>(std::size_t{1} << cut.side_a().size());
    const auto cols = static_cast<Eigen::Index>(std::size_t{1} << cut.side_b().size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (std::size_t i = 0; i < state.dimension(); i++) {
        auto r = static_cast<Eigen::Index>(gather_bits(i, cut.side_a()));
        auto c = static_cast<Eigen::Index>(gather_bits(i, cut.side_b()));
        m(r, c) = state[i];
    }
    return m;
}

}  // namespace

std::vector<double> schmidt_coefficients(const StateVector &state, const Bipartition &cut) {
    Eigen::MatrixXcd m = coefficient_matrix(state, cut);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto &values = svd.singularValues();
    return {values.data(), values.data() + values.size()};
}

std::size_t schmidt_rank(const StateVector &state, const Bipartition &cut, double tolerance) {
    auto values = schmidt_coefficients(state, cut);
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](double s) { return s > tolerance; }));
}

}  // namespace pqw
