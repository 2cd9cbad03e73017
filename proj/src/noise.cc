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

#include "pqw/noise.h"

#include <cmath>
#include <stdexcept>

#include "pqw/errors.h"
#include "pqw/parallel.h"

namespace pqw {

std::string_view channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::depolarizing:
            return "dep";
        case ChannelKind::phase_damping:
            return "pd";
        case ChannelKind::amplitude_damping:
            return "ad";
    }
    throw std::logic_error("unknown channel kind");
}

ChannelKind parse_channel_kind(std::string_view name) {
    if (name == "dep" || name == "depolarizing") {
        return ChannelKind::depolarizing;
    }
    if (name == "pd" || name == "phase_damping") {
        return ChannelKind::phase_damping;
    }
    if (name == "ad" || name == "amplitude_damping") {
        return ChannelKind::amplitude_damping;
    }
    throw std::invalid_argument("unknown channel '" + std::string(name) + "' (expected dep, pd or ad)");
}

NoiseChannel::NoiseChannel(ChannelKind kind, double p) : kind_(kind), p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("noise parameter p=" + std::to_string(p) + " is outside [0, 1]");
    }
}

std::vector<Matrix2> kraus_ops(const NoiseChannel &channel) {
    double p = channel.p();
    switch (channel.kind()) {
        case ChannelKind::depolarizing: {
            double a = std::sqrt(1.0 - 0.75 * p);
            double b = std::sqrt(0.25 * p);
            return {
                Matrix2{a, 0, 0, a},
                Matrix2{0, b, b, 0},
                Matrix2{0, Complex{0, -b}, Complex{0, b}, 0},
                Matrix2{b, 0, 0, -b},
            };
        }
        case ChannelKind::phase_damping:
            return {
                Matrix2{1, 0, 0, std::sqrt(1.0 - p)},
                Matrix2{0, 0, 0, std::sqrt(p)},
            };
        case ChannelKind::amplitude_damping:
            return {
                Matrix2{1, 0, 0, std::sqrt(1.0 - p)},
                Matrix2{0, std::sqrt(p), 0, 0},
            };
    }
    throw std::logic_error("unknown channel kind");
}

double kraus_completeness_error(const std::vector<Matrix2> &ops) {
    Matrix2 sum{0, 0, 0, 0};
    for (const Matrix2 &k : ops) {
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                // (K^dag K)_{rc} = sum_j conj(K_{jr}) K_{jc}
                sum[2 * r + c] += std::conj(k[r]) * k[c] + std::conj(k[2 + r]) * k[2 + c];
            }
        }
    }
    sum[0] -= 1.0;
    sum[3] -= 1.0;
    double err = 0.0;
    for (const Complex &v : sum) {
        err = std::max(err, std::abs(v));
    }
    return err;
}

std::string_view noise_insertion_name(NoiseInsertion insertion) {
    return insertion == NoiseInsertion::post_prep ? "post_prep" : "pre_measure";
}

NoiseInsertion parse_noise_insertion(std::string_view name) {
    if (name == "post_prep") {
        return NoiseInsertion::post_prep;
    }
    if (name == "pre_measure") {
        return NoiseInsertion::pre_measure;
    }
    throw std::invalid_argument("unknown insertion point '" + std::string(name) + "' (expected post_prep or pre_measure)");
}

namespace {

bool is_zero(const Matrix2 &m) {
    for (const Complex &v : m) {
        if (v != Complex{0, 0}) {
            return false;
        }
    }
    return true;
}

// C_s |G> for every outcome, indexed by the outcome's register pattern so that
// block b of the register pairs with targets[b].
std::vector<StateVector> corrected_targets(const Graph &graph, CorrectionKind kind, const Layout &layout) {
    StateVector g = graph_state(graph);
    std::uint64_t count = graph.outcome_count();
    std::vector<StateVector> targets(count, g);
    for (std::uint64_t index = 0; index < count; index++) {
        Outcome s = Outcome::from_index(graph.num_edges(), index);
        targets[s.register_pattern()] = apply_correction(g, compute_correction(kind, graph, s), layout);
    }
    return targets;
}

}  // namespace

double noisy_protocol_fidelity(
    const Graph &graph, const NoiseChannel &channel, CorrectionKind kind, const NoiseOptions &options) {
    if (!correction_applicable(kind, graph)) {
        throw std::invalid_argument(
            "correction '" + std::string(correction_kind_name(kind)) + "' does not apply to this graph");
    }
    Layout layout = build_layout(graph);
    std::size_t total = layout.total_qubits();
    if (total > options.max_total_qubits) {
        throw ResourceError(
            "noise simulation needs " + std::to_string(total) + " qubits; the budget is " +
            std::to_string(options.max_total_qubits) + " (try a graph with fewer edges)");
    }

    std::vector<Matrix2> ops;
    for (const Matrix2 &k : kraus_ops(channel)) {
        if (!is_zero(k)) {
            ops.push_back(k);
        }
    }
    std::size_t m = ops.size();
    std::size_t k = layout.num_edges * 2;
    std::uint64_t branches = 1;
    for (std::size_t j = 0; j < k; j++) {
        branches *= m;
    }
    std::uint64_t work_per_branch = std::uint64_t{1} << total;
    if (branches > options.max_work / work_per_branch) {
        throw ResourceError(
            "noise enumeration of " + std::to_string(branches) + " Kraus branches exceeds the work budget "
            "(try a smaller graph)");
    }

    const std::vector<StateVector> targets = corrected_targets(graph, kind, layout);
    const std::vector<std::size_t> resources = layout.resource_qubits();
    const std::size_t block = std::size_t{1} << layout.num_data;
    const bool post_prep = options.insertion == NoiseInsertion::post_prep;
    const StateVector base = post_prep ? post_preparation_state(graph, total) : pre_measurement_state(graph, total);

    std::vector<double> contributions(branches, 0.0);
    parallel_for(branches, options.jobs, [&](std::size_t b) {
        StateVector psi = base;
        std::size_t digits = b;
        for (std::size_t j = 0; j < k; j++) {
            psi.apply_matrix(ops[digits % m], resources[j]);
            digits /= m;
        }
        if (post_prep) {
            apply_walk(psi, graph, layout);
        }
        auto amps = psi.amplitudes();
        std::vector<double> overlaps(targets.size());
        for (std::size_t pattern = 0; pattern < targets.size(); pattern++) {
            auto t = targets[pattern].amplitudes();
            Complex dot = 0.0;
            for (std::size_t i = 0; i < block; i++) {
                dot += std::conj(t[i]) * amps[pattern * block + i];
            }
            overlaps[pattern] = std::norm(dot);
        }
        contributions[b] = compensated_sum(overlaps);
    });
    return compensated_sum(contributions);
}

double f_star_dep(double p, std::size_t k) {
    return std::pow(1.0 - 0.75 * p, static_cast<double>(k));
}

double f_star_pd(double p, std::size_t k) {
    return std::pow((1.0 + std::sqrt(1.0 - p)) / 2.0, static_cast<double>(k));
}

double process_fidelity(const NoiseChannel &channel) {
    double sum = 0.0;
    for (const Matrix2 &op : kraus_ops(channel)) {
        sum += std::norm((op[0] + op[3]) / 2.0);
    }
    return sum;
}

double process_fidelity_product(const NoiseChannel &channel, std::size_t k) {
    return std::pow(process_fidelity(channel), static_cast<double>(k));
}

double extract_p_eff(double fidelity, std::size_t k) {
    if (!(fidelity > 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in (0, 1]");
    }
    if (k == 0) {
        throw std::invalid_argument("k must be at least 1");
    }
    return (4.0 / 3.0) * (1.0 - std::pow(fidelity, 1.0 / static_cast<double>(k)));
}

double bhattacharyya_fidelity(
    const std::map<std::string, std::uint64_t> &counts, const std::map<std::string, double> &ideal, bool squared) {
    std::uint64_t shots = 0;
    for (const auto &[key, n] : counts) {
        shots += n;
    }
    if (counts.empty() || shots == 0) {
        throw std::invalid_argument("counts are empty");
    }
    double mass = 0.0;
    for (const auto &[key, q] : ideal) {
        if (!(q >= 0.0)) {
            throw std::invalid_argument("ideal probability for '" + key + "' is negative");
        }
        mass += q;
    }
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::invalid_argument("ideal distribution sums to " + std::to_string(mass) + ", not 1");
    }
    double overlap = 0.0;
    for (const auto &[key, n] : counts) {
        auto it = ideal.find(key);
        if (it != ideal.end()) {
            overlap += std::sqrt(static_cast<double>(n) / static_cast<double>(shots) * it->second);
        }
    }
    return squared ? overlap * overlap : overlap;
}

std::map<std::string, double> uniform_distribution(std::size_t width) {
    if (width == 0 || width > 24) {
        throw std::invalid_argument("uniform distribution width must be in 1..24");
    }
    std::map<std::string, double> out;
    std::size_t n = std::size_t{1} << width;
    double q = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; i++) {
        std::string key(width, '0');
        for (std::size_t b = 0; b < width; b++) {
            if ((i >> (width - 1 - b)) & 1) {
                key[b] = '1';
            }
        }
        out.emplace(std::move(key), q);
    }
    return out;
}

double t1_damping_estimate(double duration_us, double t1_us) {
    if (duration_us < 0.0 || !(t1_us > 0.0)) {
        throw std::invalid_argument("duration must be non-negative and T1 positive");
    }
    return 1.0 - std::exp(-duration_us / t1_us);
}

std::optional<double> analytic_fidelity(ChannelKind kind, double p, std::size_t k) {
    switch (kind) {
        case ChannelKind::depolarizing:
            return f_star_dep(p, k);
        case ChannelKind::phase_damping:
            return f_star_pd(p, k);
        case ChannelKind::amplitude_damping:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pqw
