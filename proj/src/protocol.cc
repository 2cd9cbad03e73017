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

#include "pqw/protocol.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "pqw/errors.h"

namespace pqw {

std::size_t Layout::resource_qubit_at(const Graph &graph, std::size_t edge, std::size_t vertex) const {
    const Edge &e = graph.edges().at(edge);
    if (!e.touches(vertex)) {
        throw std::invalid_argument("vertex is not an endpoint of the edge");
    }
    return resource_qubit(edge, e.first == vertex ? 0 : 1);
}

std::vector<std::size_t> Layout::data_qubits() const {
    std::vector<std::size_t> out(num_data);
    for (std::size_t v = 0; v < num_data; v++) {
        out[v] = data_qubit(v);
    }
    return out;
}

std::vector<std::size_t> Layout::resource_qubits() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < num_edges; e++) {
        out.push_back(resource_qubit(e, 0));
        out.push_back(resource_qubit(e, 1));
    }
    return out;
}

Layout build_layout(const Graph &graph) {
    return Layout{graph.num_vertices(), graph.num_edges()};
}

Outcome::Outcome(std::size_t num_edges) : bits_(2 * num_edges, 0) {
}

Outcome Outcome::from_index(std::size_t num_edges, std::uint64_t index) {
    Outcome o(num_edges);
    std::size_t n = o.bits_.size();
    if (n < 64 && (index >> n) != 0) {
        throw std::invalid_argument("outcome index out of range");
    }
    for (std::size_t k = 0; k < n; k++) {
        o.bits_[k] = static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1);
    }
    return o;
}

Outcome Outcome::with_labels(std::size_t num_edges, std::initializer_list<int> labels) {
    Outcome o(num_edges);
    for (int k : labels) {
        if (k < 1 || static_cast<std::size_t>(k) > o.bits_.size()) {
            throw std::invalid_argument("outcome label s_" + std::to_string(k) + " out of range");
        }
        o.bits_[static_cast<std::size_t>(k - 1)] = 1;
    }
    return o;
}

std::uint64_t Outcome::index() const {
    std::uint64_t index = 0;
    for (std::uint8_t b : bits_) {
        index = (index << 1) | b;
    }
    return index;
}

bool Outcome::bit(std::size_t edge, std::size_t slot) const {
    return bits_.at(2 * edge + slot) != 0;
}

void Outcome::set_bit(std::size_t edge, std::size_t slot, bool value) {
    bits_.at(2 * edge + slot) = value ? 1 : 0;
}

bool Outcome::label(std::size_t k) const {
    if (k < 1 || k > bits_.size()) {
        throw std::invalid_argument("outcome label out of range");
    }
    return bits_[k - 1] != 0;
}

bool Outcome::near(const Graph &graph, std::size_t edge, std::size_t vertex) const {
    const Edge &e = graph.edges().at(edge);
    if (!e.touches(vertex)) {
        throw std::invalid_argument("vertex is not an endpoint of the edge");
    }
    return bit(edge, e.first == vertex ? 0 : 1);
}

bool Outcome::far(const Graph &graph, std::size_t edge, std::size_t vertex) const {
    const Edge &e = graph.edges().at(edge);
    if (!e.touches(vertex)) {
        throw std::invalid_argument("vertex is not an endpoint of the edge");
    }
    return bit(edge, e.first == vertex ? 1 : 0);
}

std::uint64_t Outcome::register_pattern() const {
    std::uint64_t pattern = 0;
    for (std::size_t k = 0; k < bits_.size(); k++) {
        pattern |= static_cast<std::uint64_t>(bits_[k]) << k;
    }
    return pattern;
}

std::string Outcome::str() const {
    std::string out;
    for (std::uint8_t b : bits_) {
        out += b ? '1' : '0';
    }
    return out;
}

namespace {

void check_outcome_size(const Graph &graph, const Outcome &outcome) {
    if (outcome.num_edges() != graph.num_edges()) {
        throw std::invalid_argument(
            "outcome has " + std::to_string(outcome.size()) + " bits; the graph needs " +
            std::to_string(2 * graph.num_edges()));
    }
}

}  // namespace

std::vector<bool> far_side_parities(const Graph &graph, const Outcome &outcome) {
    check_outcome_size(graph, outcome);
    std::vector<bool> g(graph.num_vertices(), false);
    for (std::size_t k = 0; k < graph.num_edges(); k++) {
        const Edge &e = graph.edges()[k];
        g[e.first] = g[e.first] != outcome.bit(k, 1);
        g[e.second] = g[e.second] != outcome.bit(k, 0);
    }
    return g;
}

std::vector<bool> near_side_parities(const Graph &graph, const Outcome &outcome) {
    check_outcome_size(graph, outcome);
    std::vector<bool> f(graph.num_vertices(), false);
    for (std::size_t k = 0; k < graph.num_edges(); k++) {
        const Edge &e = graph.edges()[k];
        f[e.first] = f[e.first] != outcome.bit(k, 0);
        f[e.second] = f[e.second] != outcome.bit(k, 1);
    }
    return f;
}

bool CorrectionPlan::is_identity() const {
    return std::all_of(per_vertex_.begin(), per_vertex_.end(), [](const PauliCorrection &c) {
        return !c.x && !c.z;
    });
}

void CorrectionPlan::multiply(const PauliString &pauli) {
    if (pauli.num_qubits() != per_vertex_.size()) {
        throw std::invalid_argument("Pauli size does not match the plan");
    }
    for (std::size_t v = 0; v < per_vertex_.size(); v++) {
        per_vertex_[v].x = per_vertex_[v].x != pauli.x(v);
        per_vertex_[v].z = per_vertex_[v].z != pauli.z(v);
    }
}

PauliString CorrectionPlan::to_pauli() const {
    PauliString p(per_vertex_.size());
    for (std::size_t v = 0; v < per_vertex_.size(); v++) {
        p.set(v, per_vertex_[v].x, per_vertex_[v].z);
    }
    return p;
}

std::string CorrectionPlan::str(const Graph &graph) const {
    std::string out;
    for (std::size_t v = 0; v < per_vertex_.size(); v++) {
        const auto &c = per_vertex_[v];
        if (!c.x && !c.z) {
            continue;
        }
        out += (out.empty() ? "" : " ") + graph.label(v) + ":" + (c.x ? "X" : "") + (c.z ? "Z" : "");
    }
    return out.empty() ? "I" : out;
}

namespace {

// S1 and S2 on a register starting in |0...0>.
template <typename Register>
void prepare_register(Register &reg, const Layout &layout) {
    for (std::size_t q = 0; q < layout.total_qubits(); q++) {
        reg.apply(Gate::H, q);
    }
    for (std::size_t e = 0; e < layout.num_edges; e++) {
        reg.apply(Gate::CZ, layout.resource_qubit(e, 0), layout.resource_qubit(e, 1));
    }
}

template <typename Register>
void walk_and_rotate(Register &reg, const Graph &graph, const Layout &layout) {
    // S3: CZ between each data qubit and its resource halves, then H on every resource.
    for (std::size_t e = 0; e < graph.num_edges(); e++) {
        const Edge &edge = graph.edges()[e];
        reg.apply(Gate::CZ, layout.data_qubit(edge.first), layout.resource_qubit(e, 0));
        reg.apply(Gate::CZ, layout.data_qubit(edge.second), layout.resource_qubit(e, 1));
    }
    for (std::size_t q : layout.resource_qubits()) {
        reg.apply(Gate::H, q);
    }
}

StateVector extract_block(const StateVector &state, std::uint64_t pattern, std::size_t num_data) {
    const std::size_t width = std::size_t{1} << num_data;
    const std::size_t base = static_cast<std::size_t>(pattern) << num_data;
    auto amps = state.amplitudes();
    return StateVector::from_amplitudes(
        std::vector<Complex>(amps.begin() + static_cast<std::ptrdiff_t>(base),
                             amps.begin() + static_cast<std::ptrdiff_t>(base + width)));
}

}  // namespace

StateVector post_preparation_state(const Graph &graph, std::size_t max_qubits) {
    Layout layout = build_layout(graph);
    StateVector state(layout.total_qubits(), max_qubits);
    prepare_register(state, layout);
    return state;
}

void apply_walk(StateVector &state, const Graph &graph, const Layout &layout) {
    if (state.num_qubits() != layout.total_qubits()) {
        throw std::invalid_argument("register size does not match the layout");
    }
    walk_and_rotate(state, graph, layout);
}

StateVector pre_measurement_state(const Graph &graph, std::size_t max_qubits) {
    Layout layout = build_layout(graph);
    StateVector state(layout.total_qubits(), max_qubits);
    prepare_register(state, layout);
    walk_and_rotate(state, graph, layout);
    return state;
}

ProtocolSimulator::ProtocolSimulator(Graph graph, std::size_t max_qubits)
    : graph_(std::move(graph)),
      layout_(build_layout(graph_)),
      pre_measurement_(pre_measurement_state(graph_, max_qubits)) {
}

BranchResult ProtocolSimulator::branch(const Outcome &outcome) const {
    check_outcome_size(graph_, outcome);
    StateVector block = extract_block(pre_measurement_, outcome.register_pattern(), layout_.num_data);
    double probability = block.norm_squared();
    if (probability <= kZeroProbability) {
        throw ZeroProbabilityError("outcome " + outcome.str() + " has probability zero");
    }
    block.normalize();
    return {probability, std::move(block)};
}

BranchResult run_protocol(const Graph &graph, const Outcome &outcome) {
    check_outcome_size(graph, outcome);
    Layout layout = build_layout(graph);
    StateVector state = pre_measurement_state(graph);
    double probability = 1.0;
    for (std::size_t e = 0; e < layout.num_edges; e++) {
        for (std::size_t slot = 0; slot < 2; slot++) {
            Projection p = measure_project(state, layout.resource_qubit(e, slot), outcome.bit(e, slot));
            if (!p.valid()) {
                throw ZeroProbabilityError("outcome " + outcome.str() + " has probability zero");
            }
            probability *= p.probability;
            state = std::move(*p.state);
        }
    }
    return {probability, extract_block(state, outcome.register_pattern(), layout.num_data)};
}

Tableau run_protocol_tableau(const Graph &graph, const Outcome &outcome) {
    check_outcome_size(graph, outcome);
    Layout layout = build_layout(graph);
    Tableau tableau(layout.total_qubits());
    prepare_register(tableau, layout);
    walk_and_rotate(tableau, graph, layout);
    for (std::size_t e = 0; e < layout.num_edges; e++) {
        for (std::size_t slot = 0; slot < 2; slot++) {
            tableau.measure_z(layout.resource_qubit(e, slot), outcome.bit(e, slot));
        }
    }
    return tableau.reduce_to(layout.data_qubits());
}

BranchResult byproduct_step(bool s) {
    // Qubits: 0 = d, 1 = r, 2 = r'.
    StateVector state = StateVector::plus(3);
    state.apply(Gate::CZ, 1, 2);
    state.apply(Gate::CZ, 0, 1);
    state.apply(Gate::H, 1);
    Projection p = measure_project(state, 1, s);
    if (!p.valid()) {
        throw ZeroProbabilityError("walk-step outcome has probability zero");
    }
    std::vector<Complex> pair(4);
    for (std::size_t i = 0; i < 8; i++) {
        if (((i >> 1) & 1) == static_cast<std::size_t>(s)) {
            pair[(i & 1) | ((i >> 2) << 1)] = (*p.state)[i];
        }
    }
    return {p.probability, StateVector::from_amplitudes(std::move(pair))};
}

StateVector bell_phi_plus() {
    return StateVector::from_amplitudes({std::numbers::sqrt2 / 2, 0.0, 0.0, std::numbers::sqrt2 / 2});
}

std::string_view correction_kind_name(CorrectionKind kind) {
    switch (kind) {
        case CorrectionKind::universal:
            return "universal";
        case CorrectionKind::l4:
            return "l4";
        case CorrectionKind::c4:
            return "c4";
        case CorrectionKind::tree:
            return "tree";
    }
    return "?";
}

CorrectionKind parse_correction_kind(std::string_view name) {
    for (auto kind : {CorrectionKind::universal, CorrectionKind::l4, CorrectionKind::c4, CorrectionKind::tree}) {
        if (correction_kind_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument(
        "unknown correction '" + std::string(name) + "'; expected universal, l4, c4 or tree");
}

namespace {

bool is_ordered_path4(const Graph &g) {
    return g.num_vertices() == 4 &&
           g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}};
}

bool is_ordered_cycle4(const Graph &g) {
    return g.num_vertices() == 4 &&
           g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
}

}  // namespace

bool correction_applicable(CorrectionKind kind, const Graph &graph) {
    switch (kind) {
        case CorrectionKind::universal:
            return true;
        case CorrectionKind::l4:
            return is_ordered_path4(graph);
        case CorrectionKind::c4:
            return is_ordered_cycle4(graph);
        case CorrectionKind::tree:
            return graph.is_tree() && graph.num_edges() >= 1;
    }
    return false;
}

CorrectionPlan universal_correction(const Graph &graph, const Outcome &outcome) {
    auto g = far_side_parities(graph, outcome);
    CorrectionPlan plan(graph.num_vertices());
    for (std::size_t v = 0; v < g.size(); v++) {
        plan.at(v).z = g[v];
    }
    return plan;
}

CorrectionPlan l4_correction(const Graph &graph, const Outcome &outcome) {
    if (!is_ordered_path4(graph)) {
        throw std::invalid_argument("l4 correction needs the path A-B-C-D with edges AB, BC, CD");
    }
    auto s = [&](std::size_t k) { return outcome.label(k); };
    CorrectionPlan plan(4);
    plan.at(1).x = s(2);
    plan.at(2).x = s(1) != s(4);
    plan.at(3).x = (s(2) != s(3)) != s(6);
    plan.at(3).z = (s(1) != s(4)) != s(5);
    return plan;
}

CorrectionPlan c4_correction(const Graph &graph, const Outcome &outcome) {
    if (!is_ordered_cycle4(graph)) {
        throw std::invalid_argument("c4 correction needs the ring A-B-C-D-A with edges AB, BC, CD, DA");
    }
    auto s = [&](std::size_t k) { return outcome.label(k); };
    CorrectionPlan plan(4);
    plan.at(2).x = s(1) != s(4);
    plan.at(2).z = ((s(2) != s(3)) != s(6)) != s(7);
    plan.at(3).x = s(2) != s(7);
    plan.at(3).z = ((s(1) != s(4)) != s(5)) != s(8);
    return plan;
}

std::size_t default_tree_reference(const Graph &graph) {
    auto leaves = graph.leaves();
    if (leaves.empty()) {
        throw std::invalid_argument("graph has no leaf");
    }
    return *std::min_element(leaves.begin(), leaves.end(), [&](std::size_t a, std::size_t b) {
        return graph.label(a) < graph.label(b);
    });
}

namespace {

std::size_t checked_reference(const Graph &graph, std::optional<std::size_t> reference) {
    if (!correction_applicable(CorrectionKind::tree, graph)) {
        throw std::invalid_argument("tree correction needs a tree with at least one edge");
    }
    std::size_t ref = reference.value_or(default_tree_reference(graph));
    if (ref >= graph.num_vertices() || graph.degree(ref) != 1) {
        throw std::invalid_argument("tree reference must be a leaf");
    }
    return ref;
}

}  // namespace

CorrectionPlan tree_correction(const Graph &graph, const Outcome &outcome, std::optional<std::size_t> reference) {
    std::size_t ref = checked_reference(graph, reference);
    CorrectionPlan plan = universal_correction(graph, outcome);

    std::vector<std::size_t> parent(graph.num_vertices(), graph.num_vertices());
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{ref};
    parent[ref] = ref;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (std::size_t u : graph.neighbors(v)) {
            if (parent[u] == graph.num_vertices()) {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    for (std::size_t v : order) {
        if (!plan.at(v).z) {
            continue;
        }
        auto neighbors = graph.neighbors(v);
        auto child = std::find_if(neighbors.begin(), neighbors.end(), [&](std::size_t c) {
            return parent[c] == v;
        });
        // Leaves other than the reference keep their Z.
        if (child != neighbors.end()) {
            plan.multiply(vertex_stabilizer(graph, *child));
        }
    }
    return plan;
}

CorrectionPlan tree_correction_literal(
    const Graph &graph, const Outcome &outcome, std::optional<std::size_t> reference) {
    std::size_t ref = checked_reference(graph, reference);
    auto f = near_side_parities(graph, outcome);
    auto g = far_side_parities(graph, outcome);
    CorrectionPlan plan(graph.num_vertices());
    for (std::size_t v = 0; v < graph.num_vertices(); v++) {
        if (v != ref) {
            plan.at(v) = {f[v], g[v]};
        }
    }
    return plan;
}

CorrectionPlan compute_correction(CorrectionKind kind, const Graph &graph, const Outcome &outcome) {
    if (!correction_applicable(kind, graph)) {
        throw std::invalid_argument(
            "correction '" + std::string(correction_kind_name(kind)) + "' does not apply to this graph");
    }
    switch (kind) {
        case CorrectionKind::universal:
            return universal_correction(graph, outcome);
        case CorrectionKind::l4:
            return l4_correction(graph, outcome);
        case CorrectionKind::c4:
            return c4_correction(graph, outcome);
        case CorrectionKind::tree:
            return tree_correction(graph, outcome);
    }
    throw std::logic_error("unhandled correction kind");
}

StateVector apply_correction(StateVector state, const CorrectionPlan &plan, const Layout &layout) {
    if (plan.size() != layout.num_data) {
        throw std::invalid_argument("plan size does not match the layout");
    }
    for (std::size_t v = 0; v < plan.size(); v++) {
        if (plan.at(v).z) {
            state.apply(Gate::Z, layout.data_qubit(v));
        }
        if (plan.at(v).x) {
            state.apply(Gate::X, layout.data_qubit(v));
        }
    }
    return state;
}

bool plans_equivalent(const CorrectionPlan &plan_a, const CorrectionPlan &plan_b, const Graph &graph) {
    if (plan_a.size() != graph.num_vertices() || plan_b.size() != graph.num_vertices()) {
        throw std::invalid_argument("plans do not match the graph's vertex set");
    }
    CorrectionPlan product = plan_a;
    product.multiply(plan_b.to_pauli());
    return stabilizer_generators(graph).extract_sign(product.to_pauli()).has_value();
}

}  // namespace pqw
