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

#ifndef PQW_PROTOCOL_H
#define PQW_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqw/graphs.h"
#include "pqw/stabilizer.h"
#include "pqw/statevector.h"

namespace pqw {

// Distribution protocol for a target graph G:
//   S1  every data qubit d_v starts in |+>;
//   S2  each edge e = (u, v) holds a two-qubit graph state on (r_{e,u}, r_{e,v});
//   S3  each party applies CZ(d_v, r_{e,v}) for its incident edges, then H on every
//       resource qubit, and measures all resource qubits in Z;
//   S4  the outcomes are broadcast and a Pauli correction is applied to the data.

/// Qubit assignment: data qubits first in vertex order, then one pair per edge in
/// edge order, each pair ordered (first endpoint, second endpoint).
struct Layout {
    std::size_t num_data = 0;
    std::size_t num_edges = 0;

    std::size_t total_qubits() const {
        return num_data + 2 * num_edges;
    }
    std::size_t data_qubit(std::size_t v) const {
        return v;
    }
    /// slot 0 is the edge's first endpoint, slot 1 its second.
    std::size_t resource_qubit(std::size_t edge, std::size_t slot) const {
        return num_data + 2 * edge + slot;
    }
    /// The resource qubit of `edge` held by `vertex`.
    std::size_t resource_qubit_at(const Graph &graph, std::size_t edge, std::size_t vertex) const;

    std::vector<std::size_t> data_qubits() const;
    std::vector<std::size_t> resource_qubits() const;
};

Layout build_layout(const Graph &graph);

/// The 2|E| resource measurement bits.
///
/// Bit order follows the layout: edge by edge, first endpoint then second. The
/// 1-based labels s_1, s_2, ... enumerate bits in this order, and the outcome
/// index is the big-endian integer of the sequence (s_1 most significant).
class Outcome {
   public:
    explicit Outcome(std::size_t num_edges);

    static Outcome from_index(std::size_t num_edges, std::uint64_t index);
    /// All-zero outcome with the listed 1-based labels set.
    static Outcome with_labels(std::size_t num_edges, std::initializer_list<int> labels);

    std::size_t size() const {
        return bits_.size();
    }
    std::size_t num_edges() const {
        return bits_.size() / 2;
    }
    std::uint64_t index() const;

    bool bit(std::size_t edge, std::size_t slot) const;
    void set_bit(std::size_t edge, std::size_t slot, bool value);

    /// s_k for 1-based k.
    bool label(std::size_t k) const;

    /// s_{e,v}: the bit measured by `vertex` on `edge`.
    bool near(const Graph &graph, std::size_t edge, std::size_t vertex) const;
    /// s_{e,v-bar}: the bit measured by the other endpoint.
    bool far(const Graph &graph, std::size_t edge, std::size_t vertex) const;

    /// Resource bits packed little-endian in layout order; the block index of the
    /// outcome in a register whose data qubits occupy the low bits.
    std::uint64_t register_pattern() const;

    /// "s_1 s_2 ..." as a string of '0'/'1'.
    std::string str() const;

    bool operator==(const Outcome &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// XOR of far-side bits at every vertex, g_v = XOR_{e at v} s_{e,v-bar}.
std::vector<bool> far_side_parities(const Graph &graph, const Outcome &outcome);

/// XOR of near-side bits at every vertex, f_v = XOR_{e at v} s_{e,v}.
std::vector<bool> near_side_parities(const Graph &graph, const Outcome &outcome);

struct PauliCorrection {
    bool x = false;
    bool z = false;
    bool operator==(const PauliCorrection &) const = default;
};

/// Per-vertex X^x Z^z exponents.
class CorrectionPlan {
   public:
    explicit CorrectionPlan(std::size_t num_vertices) : per_vertex_(num_vertices) {
    }

    std::size_t size() const {
        return per_vertex_.size();
    }
    const PauliCorrection &at(std::size_t v) const {
        return per_vertex_.at(v);
    }
    PauliCorrection &at(std::size_t v) {
        return per_vertex_.at(v);
    }

    bool is_identity() const;

    /// Toggles the plan by a Pauli on the data qubits (phase is dropped).
    void multiply(const PauliString &pauli);

    /// The plan's operator up to a global phase, with X&Z written as Y.
    PauliString to_pauli() const;

    /// e.g. "B:X D:XZ", or "I" for the identity plan.
    std::string str(const Graph &graph) const;

    bool operator==(const CorrectionPlan &) const = default;

   private:
    std::vector<PauliCorrection> per_vertex_;
};

/// A state and the probability of the branch that produced it.
struct BranchResult {
    double probability = 0.0;
    StateVector data_state;
};

/// The full register after S1-S2, before any party acts.
StateVector post_preparation_state(const Graph &graph, std::size_t max_qubits = kDefaultMaxQubits);

/// S3 without the measurements: the CZ walk step on every incidence, then H on
/// every resource qubit.
void apply_walk(StateVector &state, const Graph &graph, const Layout &layout);

/// The full register after S1-S3 and the pre-measurement Hadamards.
StateVector pre_measurement_state(const Graph &graph, std::size_t max_qubits = kDefaultMaxQubits);

/// Simulates S1-S3 once and serves every outcome branch from the same state.
///
/// Because data qubits sit in the low bits, the projection onto all resource
/// outcomes is one contiguous block of 2^|V| amplitudes.
class ProtocolSimulator {
   public:
    explicit ProtocolSimulator(Graph graph, std::size_t max_qubits = kDefaultMaxQubits);

    const Graph &graph() const {
        return graph_;
    }
    const Layout &layout() const {
        return layout_;
    }
    const StateVector &pre_measurement() const {
        return pre_measurement_;
    }

    /// Throws ZeroProbabilityError for an impossible outcome.
    BranchResult branch(const Outcome &outcome) const;

   private:
    Graph graph_;
    Layout layout_;
    StateVector pre_measurement_;
};

/// Runs the protocol and measures the resource qubits one by one. Returns the
/// joint outcome probability and the data-qubit state.
BranchResult run_protocol(const Graph &graph, const Outcome &outcome);

/// Symbolic mirror of run_protocol: the data-qubit stabiliser group after the
/// resource qubits are measured and eliminated.
Tableau run_protocol_tableau(const Graph &graph, const Outcome &outcome);

/// One walk step on (d, r, r'): d in |+>, (r, r') in the two-qubit graph state,
/// then CZ(d, r), H(r) and the projection of r onto `s`. Returns the outcome
/// probability and the state of (d, r') with d on qubit 0.
BranchResult byproduct_step(bool s);

/// (|00> + |11>) / sqrt(2).
StateVector bell_phi_plus();

enum class CorrectionKind { universal, l4, c4, tree };

std::string_view correction_kind_name(CorrectionKind kind);
/// Throws std::invalid_argument for an unknown name.
CorrectionKind parse_correction_kind(std::string_view name);

/// Whether `kind` has a formula for `graph` (l4 needs a 4-path, c4 a 4-cycle,
/// tree a tree; universal applies everywhere).
bool correction_applicable(CorrectionKind kind, const Graph &graph);

/// C_v = Z^{g_v} with g_v the XOR of far-side outcomes at v.
CorrectionPlan universal_correction(const Graph &graph, const Outcome &outcome);

/// Path A-B-C-D with edges AB, BC, CD in that order:
/// A: I, B: X^{s2}, C: X^{s1+s4}, D: X^{s2+s3+s6} Z^{s1+s4+s5}.
CorrectionPlan l4_correction(const Graph &graph, const Outcome &outcome);

/// Ring A-B-C-D-A with edges AB, BC, CD, DA in that order:
/// A, B: I, C: X^{s1+s4} Z^{s2+s3+s6+s7}, D: X^{s2+s7} Z^{s1+s4+s5+s8}.
CorrectionPlan c4_correction(const Graph &graph, const Outcome &outcome);

/// The leaf with the lexicographically smallest label.
std::size_t default_tree_reference(const Graph &graph);

/// Tree correction with `reference` (a leaf) fixed to the identity.
///
/// Starts from the universal plan and walks away from the reference in BFS
/// order; whenever a vertex with children still carries a Z, the plan is
/// multiplied by K_c of its first child c. The result differs from the universal
/// plan by a stabiliser element, leaves the reference untouched, puts Z only on
/// leaves and reproduces the four-path formula when rooted at A.
CorrectionPlan tree_correction(
    const Graph &graph, const Outcome &outcome, std::optional<std::size_t> reference = std::nullopt);

/// C_v = X^{f_v} Z^{g_v} taken literally (f, g the near and far parities) with
/// the reference leaf set to I. Only correct for a single edge; kept for comparison.
CorrectionPlan tree_correction_literal(
    const Graph &graph, const Outcome &outcome, std::optional<std::size_t> reference = std::nullopt);

/// Dispatches on `kind`. Throws std::invalid_argument when it does not apply.
CorrectionPlan compute_correction(CorrectionKind kind, const Graph &graph, const Outcome &outcome);

/// Applies Z_v^{z_v} then X_v^{x_v} on each vertex's data qubit.
StateVector apply_correction(StateVector state, const CorrectionPlan &plan, const Layout &layout);

/// True iff plan_a * plan_b lies in +-Stab(|G>).
bool plans_equivalent(const CorrectionPlan &plan_a, const CorrectionPlan &plan_b, const Graph &graph);

}  // namespace pqw

#endif
