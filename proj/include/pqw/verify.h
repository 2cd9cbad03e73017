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

#ifndef PQW_VERIFY_H
#define PQW_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pqw/graphs.h"
#include "pqw/noise.h"
#include "pqw/protocol.h"
#include "pqw/statevector.h"

namespace pqw {

inline constexpr double kFidelityTolerance = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-12;

struct OutcomeRecord {
    std::uint64_t index = 0;
    double probability = 0.0;
    double fidelity = 0.0;
};

struct VerificationReport {
    std::string graph_name;
    CorrectionKind correction = CorrectionKind::universal;
    std::uint64_t outcome_count = 0;
    double min_fidelity = 1.0;
    double max_fidelity = 0.0;
    double max_probability_deviation = 0.0;
    double fidelity_tolerance = kFidelityTolerance;
    double probability_tolerance = kProbabilityTolerance;
    /// Sorted by outcome index.
    std::vector<OutcomeRecord> records;
    bool pass = false;
};

struct VerifyOptions {
    double fidelity_tolerance = kFidelityTolerance;
    double probability_tolerance = kProbabilityTolerance;
    std::size_t jobs = 1;
    std::size_t max_qubits = kDefaultMaxQubits;
};

/// Runs the protocol for every outcome, applies the `kind` correction and compares
/// with graph_state(graph). Throws std::invalid_argument when `kind` does not
/// apply and ResourceError when the register exceeds `max_qubits`.
VerificationReport verify_all_outcomes(
    const Graph &graph, CorrectionKind kind, const std::string &graph_name = "",
    const VerifyOptions &options = {});

/// Compares the tableau signs of every K_v after the protocol with (-1)^{g_v}.
/// Checks every outcome when there are at most 4096, plus `samples` uniformly
/// random outcomes drawn with `seed`.
bool phase_lemma_check(const Graph &graph, std::size_t samples = 0, std::uint64_t seed = 0);

struct LcCut {
    Bipartition cut;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
};

struct LcReport {
    std::vector<LcCut> cuts;
    /// True when some cut separates the ranks; equal ranks prove nothing.
    bool inequivalent = false;
};

LcReport lc_check(
    const StateVector &state_a, const StateVector &state_b, const std::vector<Bipartition> &cuts,
    double tolerance = kDefaultSchmidtTolerance);

/// Exact noisy fidelity at each p, with the analytic overlay where one exists.
NoiseReport noise_sweep(
    const Graph &graph, ChannelKind channel, const std::vector<double> &p_grid,
    CorrectionKind kind = CorrectionKind::universal, const NoiseOptions &options = {},
    const std::string &graph_name = "");

}  // namespace pqw

#endif
