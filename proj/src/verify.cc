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

#include "pqw/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pqw/parallel.h"

namespace pqw {

VerificationReport verify_all_outcomes(
    const Graph &graph, CorrectionKind kind, const std::string &graph_name, const VerifyOptions &options) {
    if (!correction_applicable(kind, graph)) {
        throw std::invalid_argument(
            "correction '" + std::string(correction_kind_name(kind)) + "' does not apply to graph '" +
            graph_name + "'");
    }
    ProtocolSimulator sim(graph, options.max_qubits);
    const StateVector target = graph_state(graph);
    const std::uint64_t count = graph.outcome_count();
    const double expected_probability = 1.0 / static_cast<double>(count);

    VerificationReport report;
    report.graph_name = graph_name;
    report.correction = kind;
    report.outcome_count = count;
    report.fidelity_tolerance = options.fidelity_tolerance;
    report.probability_tolerance = options.probability_tolerance;
    report.records.resize(count);

    parallel_for(count, options.jobs, [&](std::size_t index) {
        Outcome s = Outcome::from_index(graph.num_edges(), index);
        BranchResult branch = sim.branch(s);
        StateVector corrected = apply_correction(branch.data_state, compute_correction(kind, graph, s), sim.layout());
        report.records[index] = OutcomeRecord{index, branch.probability, fidelity(corrected, target)};
    });

    for (const OutcomeRecord &r : report.records) {
        report.min_fidelity = std::min(report.min_fidelity, r.fidelity);
        report.max_fidelity = std::max(report.max_fidelity, r.fidelity);
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, std::abs(r.probability - expected_probability));
    }
    report.pass = report.min_fidelity >= 1.0 - options.fidelity_tolerance &&
                  report.max_probability_deviation <= options.probability_tolerance;
    return report;
}

namespace {

bool signs_match(const Graph &graph, const Outcome &s) {
    Tableau data = run_protocol_tableau(graph, s);
    std::vector<bool> g = far_side_parities(graph, s);
    for (std::size_t v = 0; v < graph.num_vertices(); v++) {
        std::optional<int> sign = data.extract_sign(vertex_stabilizer(graph, v));
        if (!sign.has_value() || *sign != (g[v] ? -1 : +1)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool phase_lemma_check(const Graph &graph, std::size_t samples, std::uint64_t seed) {
    constexpr std::uint64_t kExhaustiveLimit = 4096;
    std::uint64_t count = graph.outcome_count();
    if (count <= kExhaustiveLimit) {
        for (std::uint64_t index = 0; index < count; index++) {
            if (!signs_match(graph, Outcome::from_index(graph.num_edges(), index))) {
                return false;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    for (std::size_t k = 0; k < samples; k++) {
        if (!signs_match(graph, Outcome::from_index(graph.num_edges(), pick(rng)))) {
            return false;
        }
    }
    return true;
}

LcReport lc_check(
    const StateVector &state_a, const StateVector &state_b, const std::vector<Bipartition> &cuts, double tolerance) {
    if (state_a.num_qubits() != state_b.num_qubits()) {
        throw std::invalid_argument("lc_check needs states on the same number of qubits");
    }
    LcReport report;
    for (const Bipartition &cut : cuts) {
        LcCut row{cut, schmidt_rank(state_a, cut, tolerance), schmidt_rank(state_b, cut, tolerance)};
        report.inequivalent = report.inequivalent || row.rank_a != row.rank_b;
        report.cuts.push_back(std::move(row));
    }
    return report;
}

NoiseReport noise_sweep(
    const Graph &graph, ChannelKind channel, const std::vector<double> &p_grid, CorrectionKind kind,
    const NoiseOptions &options, const std::string &graph_name) {
    NoiseReport report;
    report.graph_name = graph_name;
    report.channel = channel;
    report.correction = kind;
    report.insertion = options.insertion;
    report.k = 2 * graph.num_edges();
    report.p_grid = p_grid;
    bool has_analytic = analytic_fidelity(channel, 0.0, report.k).has_value();
    if (has_analytic) {
        report.analytic.emplace();
    }
    for (double p : p_grid) {
        report.fidelities.push_back(noisy_protocol_fidelity(graph, NoiseChannel(channel, p), kind, options));
        if (has_analytic) {
            report.analytic->push_back(*analytic_fidelity(channel, p, report.k));
        }
    }
    return report;
}

}  // namespace pqw
