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

#ifndef PQW_NOISE_H
#define PQW_NOISE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqw/graphs.h"
#include "pqw/protocol.h"
#include "pqw/statevector.h"

namespace pqw {

enum class ChannelKind { depolarizing, phase_damping, amplitude_damping };

/// "dep", "pd", "ad".
std::string_view channel_kind_name(ChannelKind kind);
/// Accepts the short names and the long ones ("depolarizing", ...).
ChannelKind parse_channel_kind(std::string_view name);

/// A single-qubit channel applied independently to every resource qubit.
class NoiseChannel {
   public:
    /// Throws std::invalid_argument unless 0 <= p <= 1.
    NoiseChannel(ChannelKind kind, double p);

    ChannelKind kind() const {
        return kind_;
    }
    double p() const {
        return p_;
    }

   private:
    ChannelKind kind_;
    double p_;
};

/// Kraus operators, including ones that vanish at this p:
///   dep: sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z
///   pd:  diag(1, sqrt(1-p)), diag(0, sqrt(p))
///   ad:  diag(1, sqrt(1-p)), sqrt(p) |0><1|
std::vector<Matrix2> kraus_ops(const NoiseChannel &channel);

/// max_ij |(sum_k K_k^dag K_k - I)_ij|.
double kraus_completeness_error(const std::vector<Matrix2> &ops);

/// Where the channel acts: after S2 (transmission of the resource qubits) or
/// immediately before the resource measurements.
enum class NoiseInsertion { post_prep, pre_measure };

std::string_view noise_insertion_name(NoiseInsertion insertion);
NoiseInsertion parse_noise_insertion(std::string_view name);

struct NoiseOptions {
    NoiseInsertion insertion = NoiseInsertion::post_prep;
    /// Worker threads; 0 uses every hardware thread. Results do not depend on it.
    std::size_t jobs = 1;
    /// Data plus resource qubits.
    std::size_t max_total_qubits = 12;
    /// Upper bound on (Kraus branches) x (register amplitudes).
    std::uint64_t max_work = std::uint64_t{1} << 31;
};

/// Exact optimal fidelity
///   F* = sum_branches sum_s |<G| C_s K_branch |psi>_s|^2
/// where K_branch ranges over all products of per-qubit Kraus operators on the
/// 2|E| resource qubits, s over all resource outcomes, and C_s is the noiseless
/// correction of `kind`. Throws ResourceError when the graph is over budget and
/// std::invalid_argument when `kind` does not apply to `graph`.
double noisy_protocol_fidelity(
    const Graph &graph, const NoiseChannel &channel, CorrectionKind kind = CorrectionKind::universal,
    const NoiseOptions &options = {});

/// (1 - 3p/4)^k.
double f_star_dep(double p, std::size_t k);
/// ((1 + sqrt(1-p)) / 2)^k.
double f_star_pd(double p, std::size_t k);

/// Entanglement fidelity of one channel use, sum_i |tr(K_i) / 2|^2.
double process_fidelity(const NoiseChannel &channel);

/// process_fidelity^k: the probability that no resource qubit is disturbed. Equals
/// f_star_dep and f_star_pd for those channels, and never exceeds the exact F*.
double process_fidelity_product(const NoiseChannel &channel, std::size_t k);

/// Inverts f_star_dep: p = (4/3)(1 - F^(1/k)). Throws std::invalid_argument
/// for F outside (0, 1] or k = 0.
double extract_p_eff(double fidelity, std::size_t k);

/// Classical fidelity (sum_x sqrt(phat_x q_x))^2 between the empirical
/// distribution of `counts` and `ideal`; `squared = false` drops the square.
/// Throws std::invalid_argument for empty or all-zero counts, or an `ideal`
/// that is not a distribution within 1e-9.
double bhattacharyya_fidelity(
    const std::map<std::string, std::uint64_t> &counts, const std::map<std::string, double> &ideal,
    bool squared = true);

/// Uniform distribution over every bitstring of the given width.
std::map<std::string, double> uniform_distribution(std::size_t width);

/// 1 - exp(-duration / t1).
double t1_damping_estimate(double duration_us, double t1_us);

/// Exact fidelities over a p grid, with the closed form where one exists.
struct NoiseReport {
    std::string graph_name;
    ChannelKind channel = ChannelKind::depolarizing;
    CorrectionKind correction = CorrectionKind::universal;
    NoiseInsertion insertion = NoiseInsertion::post_prep;
    /// Number of resource qubits, 2|E|.
    std::size_t k = 0;
    std::vector<double> p_grid;
    std::vector<double> fidelities;
    std::optional<std::vector<double>> analytic;
};

/// The closed form for `kind`, if there is one (amplitude damping has none).
std::optional<double> analytic_fidelity(ChannelKind kind, double p, std::size_t k);

}  // namespace pqw

#endif
