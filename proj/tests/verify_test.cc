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

#include <gtest/gtest.h>

#include "pqw/errors.h"

using namespace pqw;

TEST(verify, four_path_all_outcomes) {
    VerificationReport r = verify_all_outcomes(catalog_lookup("P4"), CorrectionKind::l4, "P4");
    ASSERT_EQ(r.outcome_count, 64u);
    ASSERT_EQ(r.records.size(), 64u);
    ASSERT_TRUE(r.pass);
    ASSERT_GE(r.min_fidelity, 1.0 - 1e-12);
    ASSERT_LE(r.max_probability_deviation, 1e-12);
    for (std::size_t i = 0; i < r.records.size(); i++) {
        ASSERT_EQ(r.records[i].index, i);
        ASSERT_NEAR(r.records[i].probability, 1.0 / 64, 1e-12);
    }
}

TEST(verify, four_cycle_and_k4) {
    ASSERT_TRUE(verify_all_outcomes(catalog_lookup("C4"), CorrectionKind::c4).pass);
    VerifyOptions options;
    options.jobs = 0;
    VerificationReport k4 = verify_all_outcomes(catalog_lookup("K4"), CorrectionKind::universal, "K4", options);
    ASSERT_EQ(k4.outcome_count, 4096u);
    ASSERT_TRUE(k4.pass);
}

TEST(verify, universal_suite) {
    VerifyOptions options;
    options.jobs = 0;
    for (const std::string &name : universal_suite_names()) {
        ASSERT_TRUE(verify_all_outcomes(catalog_lookup(name), CorrectionKind::universal, name, options).pass) << name;
    }
}

TEST(verify, specific_suite) {
    VerifyOptions options;
    options.jobs = 0;
    for (const std::string &name : specific_suite_names()) {
        const CatalogEntry &e = catalog_entry(name);
        CorrectionKind kind = parse_correction_kind(*e.specific_correction);
        ASSERT_TRUE(verify_all_outcomes(e.graph, kind, name, options).pass) << name;
        ASSERT_TRUE(verify_all_outcomes(e.graph, CorrectionKind::universal, name, options).pass) << name;
    }
}

TEST(verify, inapplicable_correction) {
    ASSERT_THROW(verify_all_outcomes(catalog_lookup("C4"), CorrectionKind::l4), std::invalid_argument);
    ASSERT_THROW(verify_all_outcomes(catalog_lookup("C4"), CorrectionKind::tree), std::invalid_argument);
}

TEST(verify, pass_flag_follows_tolerances) {
    VerifyOptions impossible;
    impossible.fidelity_tolerance = -1.0;
    ASSERT_FALSE(verify_all_outcomes(catalog_lookup("P3"), CorrectionKind::universal, "P3", impossible).pass);
    VerifyOptions strict_probability;
    strict_probability.probability_tolerance = -1.0;
    ASSERT_FALSE(verify_all_outcomes(catalog_lookup("P3"), CorrectionKind::universal, "P3", strict_probability).pass);
}

TEST(verify, deterministic_across_thread_counts) {
    VerifyOptions one;
    one.jobs = 1;
    VerifyOptions many;
    many.jobs = 8;
    VerificationReport a = verify_all_outcomes(catalog_lookup("C5"), CorrectionKind::universal, "C5", one);
    VerificationReport b = verify_all_outcomes(catalog_lookup("C5"), CorrectionKind::universal, "C5", many);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); i++) {
        ASSERT_EQ(a.records[i].probability, b.records[i].probability);
        ASSERT_EQ(a.records[i].fidelity, b.records[i].fidelity);
    }
    ASSERT_EQ(a.max_probability_deviation, b.max_probability_deviation);
}

TEST(verify, phase_lemma) {
    ASSERT_TRUE(phase_lemma_check(catalog_lookup("P4")));
    ASSERT_TRUE(phase_lemma_check(catalog_lookup("C5")));
    ASSERT_TRUE(phase_lemma_check(catalog_lookup("K4"), 50, 9));
    // Beyond the exhaustive limit only samples are drawn.
    Graph big = Graph::from_edges(
        {"A", "B", "C", "D", "E", "F", "G"},
        {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "E"}, {"E", "F"}, {"F", "G"}, {"G", "A"}});
    ASSERT_EQ(big.outcome_count(), 16384u);
    ASSERT_TRUE(phase_lemma_check(big, 200, 1));
}

TEST(verify, lc_check_examples) {
    StateVector l4 = graph_state(catalog_lookup("P4"));
    StateVector ghz = ghz_state(4);
    Bipartition ac_bd = Bipartition::from_side_a({0, 2}, 4);
    Bipartition ab_cd = Bipartition::from_side_a({0, 1}, 4);

    LcReport r = lc_check(l4, ghz, {ac_bd});
    ASSERT_EQ(r.cuts[0].rank_a, 4u);
    ASSERT_EQ(r.cuts[0].rank_b, 2u);
    ASSERT_TRUE(r.inequivalent);

    LcReport same = lc_check(l4, l4, {ac_bd, ab_cd});
    ASSERT_FALSE(same.inequivalent);
    ASSERT_EQ(same.cuts[0].rank_a, 4u);

    StateVector ghz_local = ghz;
    for (std::size_t q = 1; q < 4; q++) {
        ghz_local.apply(Gate::H, q);
    }
    LcReport g = lc_check(ghz, ghz_local, {ac_bd, ab_cd});
    ASSERT_EQ(g.cuts[0].rank_a, 2u);
    ASSERT_EQ(g.cuts[0].rank_b, 2u);
    ASSERT_EQ(g.cuts[1].rank_a, 2u);
    ASSERT_FALSE(g.inequivalent);

    ASSERT_THROW(lc_check(l4, ghz_state(3), {ac_bd}), std::invalid_argument);
}

TEST(verify, noise_sweep) {
    Graph p4 = catalog_lookup("P4");
    NoiseReport zero = noise_sweep(p4, ChannelKind::depolarizing, {0.0});
    ASSERT_EQ(zero.k, 6u);
    ASSERT_NEAR(zero.fidelities[0], 1.0, 1e-12);
    ASSERT_TRUE(zero.analytic.has_value());
    ASSERT_EQ((*zero.analytic)[0], 1.0);

    NoiseReport ad = noise_sweep(p4, ChannelKind::amplitude_damping, {0.0, 0.2, 0.4, 0.6, 0.8, 1.0});
    ASSERT_FALSE(ad.analytic.has_value());
    NoiseReport pd = noise_sweep(p4, ChannelKind::phase_damping, ad.p_grid);
    for (std::size_t i = 1; i < ad.fidelities.size(); i++) {
        ASSERT_LE(ad.fidelities[i], ad.fidelities[i - 1] + 1e-12);
        ASSERT_LE(ad.fidelities[i], pd.fidelities[i] + 1e-12);
    }
}
