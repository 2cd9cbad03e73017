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

#include <gtest/gtest.h>

#include "pqw/errors.h"

using namespace pqw;

namespace {

// Graphs small enough to push every outcome through both engines quickly.
const char *kSmallGraphs[] = {"P3", "P4", "K1_2", "K1_3", "C3", "C4", "K3", "paw", "P5", "spider", "fork"};

Graph single_edge() {
    return Graph::from_edges({"A", "B"}, {{"A", "B"}});
}

bool plan_is_exact(const Graph &graph, const ProtocolSimulator &sim, const Outcome &s, const CorrectionPlan &plan) {
    StateVector corrected = apply_correction(sim.branch(s).data_state, plan, sim.layout());
    return fidelity(corrected, graph_state(graph)) >= 1.0 - 1e-12;
}

}  // namespace

TEST(layout, qubit_assignment) {
    Graph p4 = catalog_lookup("P4");
    Layout layout = build_layout(p4);
    ASSERT_EQ(layout.total_qubits(), 10u);
    ASSERT_EQ(layout.data_qubit(2), 2u);
    ASSERT_EQ(layout.resource_qubit(0, 0), 4u);
    ASSERT_EQ(layout.resource_qubit(2, 1), 9u);
    ASSERT_EQ(layout.resource_qubit_at(p4, 1, 2), 7u);
    ASSERT_THROW(layout.resource_qubit_at(p4, 1, 0), std::invalid_argument);
}

TEST(outcome, labels_and_indices) {
    Outcome s = Outcome::with_labels(3, {2, 6});
    ASSERT_EQ(s.str(), "010001");
    ASSERT_EQ(s.index(), 0b010001u);
    ASSERT_EQ(Outcome::from_index(3, s.index()), s);
    ASSERT_TRUE(s.label(2));
    ASSERT_FALSE(s.label(1));
    ASSERT_TRUE(s.bit(0, 1));
    ASSERT_EQ(s.register_pattern(), 0b100010u);
    ASSERT_THROW(Outcome::from_index(3, 64), std::invalid_argument);
    ASSERT_THROW(Outcome::with_labels(3, {7}), std::invalid_argument);

    Graph p4 = catalog_lookup("P4");
    // s2 = AB measured at B: near for B, far for A.
    ASSERT_TRUE(s.near(p4, 0, 1));
    ASSERT_TRUE(s.far(p4, 0, 0));
    ASSERT_FALSE(s.near(p4, 0, 0));
}

TEST(outcome, parities) {
    Graph p4 = catalog_lookup("P4");
    Outcome s = Outcome::with_labels(3, {1, 4, 5});
    // g_v: XOR of the bits measured by v's neighbours on shared edges.
    std::vector<bool> g = far_side_parities(p4, s);
    ASSERT_EQ(g, (std::vector<bool>{false, false, false, true}));
    std::vector<bool> f = near_side_parities(p4, s);
    ASSERT_EQ(f, (std::vector<bool>{true, false, false, false}));
    ASSERT_THROW(far_side_parities(p4, Outcome(2)), std::invalid_argument);
}

TEST(correction_plan, str_and_multiply) {
    Graph p4 = catalog_lookup("P4");
    CorrectionPlan plan(4);
    ASSERT_TRUE(plan.is_identity());
    ASSERT_EQ(plan.str(p4), "I");
    plan.at(1).x = true;
    plan.at(3) = {true, true};
    ASSERT_EQ(plan.str(p4), "B:X D:XZ");
    ASSERT_EQ(plan.to_pauli().str(), "+_X_Y");
    plan.multiply(PauliString::from_str("_X_Y"));
    ASSERT_TRUE(plan.is_identity());
}

TEST(byproduct, single_edge_step) {
    StateVector phi = bell_phi_plus();
    for (bool s : {false, true}) {
        BranchResult r = byproduct_step(s);
        ASSERT_NEAR(r.probability, 0.5, 1e-12);
        StateVector expected = phi;
        if (s) {
            expected.apply(Gate::X, 0);
        }
        ASSERT_NEAR(fidelity(r.data_state, expected), 1.0, 1e-12);
    }
}

TEST(protocol, simulator_matches_sequential_measurement) {
    for (const char *name : {"P3", "P4", "C3", "K1_3"}) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
            Outcome s = Outcome::from_index(g.num_edges(), index);
            BranchResult a = sim.branch(s);
            BranchResult b = run_protocol(g, s);
            ASSERT_NEAR(a.probability, b.probability, 1e-12) << name << " " << s.str();
            ASSERT_NEAR(fidelity(a.data_state, b.data_state), 1.0, 1e-12) << name << " " << s.str();
        }
    }
}

TEST(protocol, outcomes_are_uniform) {
    for (const char *name : kSmallGraphs) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        double expected = 1.0 / static_cast<double>(g.outcome_count());
        for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
            ASSERT_NEAR(sim.branch(Outcome::from_index(g.num_edges(), index)).probability, expected, 1e-12) << name;
        }
    }
}

TEST(protocol, universal_correction_restores_graph_state) {
    for (const char *name : kSmallGraphs) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
            Outcome s = Outcome::from_index(g.num_edges(), index);
            ASSERT_TRUE(plan_is_exact(g, sim, s, universal_correction(g, s))) << name << " " << s.str();
        }
    }
}

TEST(protocol, tableau_signs_follow_far_side_parities) {
    for (const char *name : kSmallGraphs) {
        Graph g = catalog_lookup(name);
        for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
            Outcome s = Outcome::from_index(g.num_edges(), index);
            Tableau t = run_protocol_tableau(g, s);
            std::vector<bool> parity = far_side_parities(g, s);
            for (std::size_t v = 0; v < g.num_vertices(); v++) {
                ASSERT_EQ(t.extract_sign(vertex_stabilizer(g, v)), parity[v] ? -1 : 1) << name << " " << s.str();
            }
        }
    }
}

TEST(protocol, tableau_matches_dense_state) {
    for (const char *name : {"P3", "P4", "C4", "K1_3", "paw"}) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        for (std::uint64_t index = 0; index < g.outcome_count(); index += 7) {
            Outcome s = Outcome::from_index(g.num_edges(), index);
            ASSERT_TRUE(check_stabilizes(sim.branch(s).data_state, run_protocol_tableau(g, s))) << name;
        }
    }
}

TEST(protocol, zero_outcome_has_positive_signs) {
    for (const CatalogEntry &e : catalog()) {
        Tableau t = run_protocol_tableau(e.graph, Outcome(e.graph.num_edges()));
        for (std::size_t v = 0; v < e.graph.num_vertices(); v++) {
            ASSERT_EQ(t.extract_sign(vertex_stabilizer(e.graph, v)), 1) << e.name;
        }
    }
}

TEST(corrections, l4_formula) {
    Graph p4 = catalog_lookup("P4");
    Outcome s = Outcome::with_labels(3, {1, 2, 5});
    // B: X^{s2}, C: X^{s1+s4}, D: X^{s2+s3+s6} Z^{s1+s4+s5}.
    ASSERT_EQ(l4_correction(p4, s).str(p4), "B:X C:X D:X");
    ASSERT_EQ(l4_correction(p4, Outcome(3)).str(p4), "I");

    ProtocolSimulator sim(p4);
    for (std::uint64_t index = 0; index < 64; index++) {
        Outcome o = Outcome::from_index(3, index);
        CorrectionPlan plan = l4_correction(p4, o);
        ASSERT_FALSE(plan.at(0).x || plan.at(0).z);
        ASSERT_TRUE(plan_is_exact(p4, sim, o, plan)) << o.str();
        ASSERT_TRUE(plans_equivalent(plan, universal_correction(p4, o), p4));
    }
}

TEST(corrections, c4_formula) {
    Graph c4 = catalog_lookup("C4");
    ProtocolSimulator sim(c4);
    for (std::uint64_t index = 0; index < 256; index++) {
        Outcome o = Outcome::from_index(4, index);
        CorrectionPlan plan = c4_correction(c4, o);
        ASSERT_TRUE(plan.at(0) == PauliCorrection{} && plan.at(1) == PauliCorrection{});
        ASSERT_TRUE(plan_is_exact(c4, sim, o, plan)) << o.str();
        ASSERT_TRUE(plans_equivalent(plan, universal_correction(c4, o), c4));
    }
}

TEST(corrections, c4_label_ordering_search) {
    // Reading s_{2k+1}, s_{2k+2} with the endpoints of edge k swapped; only the
    // near-first reading (mask 0) is needed, but report how many orderings work.
    Graph c4 = catalog_lookup("C4");
    ProtocolSimulator sim(c4);
    std::vector<int> working;
    for (int mask = 0; mask < 16; mask++) {
        bool all = true;
        for (std::uint64_t index = 0; index < 256 && all; index++) {
            Outcome o = Outcome::from_index(4, index);
            Outcome read = o;
            for (std::size_t e = 0; e < 4; e++) {
                if ((mask >> e) & 1) {
                    read.set_bit(e, 0, o.bit(e, 1));
                    read.set_bit(e, 1, o.bit(e, 0));
                }
            }
            all = plan_is_exact(c4, sim, o, c4_correction(c4, read));
        }
        if (all) {
            working.push_back(mask);
        }
    }
    ASSERT_FALSE(working.empty());
    ASSERT_EQ(working.front(), 0);
}

TEST(corrections, tree_matches_l4_on_path) {
    Graph p4 = catalog_lookup("P4");
    ASSERT_EQ(default_tree_reference(p4), 0u);
    for (std::uint64_t index = 0; index < 64; index++) {
        Outcome o = Outcome::from_index(3, index);
        ASSERT_EQ(tree_correction(p4, o), l4_correction(p4, o)) << o.str();
    }
}

TEST(corrections, tree_is_exact_on_trees) {
    for (const char *name : {"P3", "P4", "P5", "K1_2", "K1_3", "K1_4", "spider", "fork"}) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        for (std::size_t ref : g.leaves()) {
            for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
                Outcome o = Outcome::from_index(g.num_edges(), index);
                CorrectionPlan plan = tree_correction(g, o, ref);
                ASSERT_TRUE(plan.at(ref) == PauliCorrection{}) << name;
                for (std::size_t v = 0; v < g.num_vertices(); v++) {
                    if (plan.at(v).z) {
                        ASSERT_EQ(g.degree(v), 1u) << name << ": Z on an inner vertex";
                    }
                }
                ASSERT_TRUE(plan_is_exact(g, sim, o, plan)) << name << " " << o.str();
            }
        }
    }
}

TEST(corrections, literal_tree_reading_only_holds_on_one_edge) {
    Graph k2 = single_edge();
    ProtocolSimulator sim_k2(k2);
    for (std::uint64_t index = 0; index < 4; index++) {
        Outcome o = Outcome::from_index(1, index);
        ASSERT_TRUE(plan_is_exact(k2, sim_k2, o, tree_correction_literal(k2, o)));
    }
    for (const char *name : {"P3", "P4"}) {
        Graph g = catalog_lookup(name);
        ProtocolSimulator sim(g);
        std::size_t failures = 0;
        for (std::uint64_t index = 0; index < g.outcome_count(); index++) {
            Outcome o = Outcome::from_index(g.num_edges(), index);
            failures += plan_is_exact(g, sim, o, tree_correction_literal(g, o)) ? 0 : 1;
        }
        ASSERT_GT(failures, 0u) << name;
    }
    // The P4 counterexample: s2 = 1 leaves Z_A X_B, outside +-Stab(L4).
    Graph p4 = catalog_lookup("P4");
    Outcome s2 = Outcome::with_labels(3, {2});
    ASSERT_FALSE(plans_equivalent(tree_correction_literal(p4, s2), universal_correction(p4, s2), p4));
}

TEST(corrections, plans_equivalent_examples) {
    Graph p4 = catalog_lookup("P4");
    CorrectionPlan identity(4);
    ASSERT_TRUE(plans_equivalent(identity, identity, p4));
    CorrectionPlan xb(4);
    xb.at(1).x = true;
    ASSERT_FALSE(plans_equivalent(identity, xb, p4));
    CorrectionPlan kb(4);  // K_B = Z_A X_B Z_C
    kb.at(0).z = true;
    kb.at(1).x = true;
    kb.at(2).z = true;
    ASSERT_TRUE(plans_equivalent(identity, kb, p4));
}

TEST(corrections, apply_correction_is_an_involution) {
    Graph p4 = catalog_lookup("P4");
    Layout layout = build_layout(p4);
    CorrectionPlan zb(4);
    zb.at(1).z = true;
    StateVector l4 = graph_state(p4);
    StateVector twice = apply_correction(apply_correction(l4, zb, layout), zb, layout);
    ASSERT_NEAR(fidelity(twice, l4), 1.0, 1e-15);
    ASSERT_NEAR(fidelity(apply_correction(l4, CorrectionPlan(4), layout), l4), 1.0, 1e-15);
}

TEST(corrections, applicability) {
    ASSERT_TRUE(correction_applicable(CorrectionKind::l4, catalog_lookup("P4")));
    ASSERT_FALSE(correction_applicable(CorrectionKind::l4, catalog_lookup("C4")));
    ASSERT_TRUE(correction_applicable(CorrectionKind::c4, catalog_lookup("C4")));
    ASSERT_FALSE(correction_applicable(CorrectionKind::c4, catalog_lookup("P4")));
    ASSERT_TRUE(correction_applicable(CorrectionKind::tree, catalog_lookup("spider")));
    ASSERT_FALSE(correction_applicable(CorrectionKind::tree, catalog_lookup("C3")));
    ASSERT_TRUE(correction_applicable(CorrectionKind::universal, catalog_lookup("K4")));
    ASSERT_THROW(
        compute_correction(CorrectionKind::l4, catalog_lookup("C4"), Outcome(4)), std::invalid_argument);
    ASSERT_EQ(parse_correction_kind("c4"), CorrectionKind::c4);
    ASSERT_EQ(correction_kind_name(CorrectionKind::tree), "tree");
    ASSERT_THROW(parse_correction_kind("bogus"), std::invalid_argument);
}

TEST(protocol, resource_budget) {
    // K4 needs 16 qubits; a 12-qubit ceiling refuses it.
    ASSERT_THROW(ProtocolSimulator(catalog_lookup("K4"), 12), ResourceError);
}
