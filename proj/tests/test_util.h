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

#ifndef PQW_TESTS_TEST_UTIL_H
#define PQW_TESTS_TEST_UTIL_H

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqw/statevector.h"

namespace pqw::testing {

/// Haar-ish random state: independent complex Gaussians, normalized.
template <typename Rng>
StateVector random_state(std::size_t num_qubits, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

/// Dense 2x2 matrix of a single-qubit Pauli letter.
inline std::array<Complex, 4> pauli_matrix(char p) {
    const Complex i{0, 1};
    switch (p) {
        case 'X':
            return {0, 1, 1, 0};
        case 'Y':
            return {0, -i, i, 0};
        case 'Z':
            return {1, 0, 0, -1};
        default:
            return {1, 0, 0, 1};
    }
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pqw::testing

#endif
