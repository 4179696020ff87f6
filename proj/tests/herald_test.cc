// Copyright 2026 The freqbin Authors
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

#include "freqbin/herald.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "freqbin/elements.h"
#include "freqbin/error.h"
#include "test_util.h"

using namespace freqbin;

namespace {

PostSelection checked(const StateVector &s, const HeraldRule &rule) {
    PostSelection sel = post_select(s, rule);
    EXPECT_NEAR(sel.total_probability(), 1.0, 1e-9);
    return sel;
}

StateVector sources() {
    return tensor(make_source({"Phi", {"1", 0}, {"2", 1}, {"1'", 1}, {"2'", 0}}),
                  make_source({"Psi", {"3", 0}, {"4", 1}, {"3'", 1}, {"4'", 0}}));
}

StateVector swap_evolved(Convention c) {
    StateVector s = sources();
    s = apply_element(s, make_aom({"AOM1", {"2", 1}, {"3", 0}, "T1", "T1'", 1, std::numbers::sqrt2 / 2, c})).state;
    return apply_element(s, make_aom({"AOM2", {"3'", 1}, {"2'", 0}, "T2'", "T2", 1, std::numbers::sqrt2 / 2, c})).state;
}

StateVector ghz_evolved() {
    return apply_element(sources(), make_aom({"AOM", {"2", 1}, {"3", 0}, "T'", "T", 1, std::numbers::sqrt2 / 2}))
        .state;
}

}  // namespace

TEST(PostSelect, OnePhotonPerAomAcceptsHalf) {
    for (Convention c : {Convention::Unitary, Convention::PaperLiteral}) {
        PostSelection sel = checked(swap_evolved(c), HeraldRule{{{{"T1", "T1'"}, 1}, {{"T2", "T2'"}, 1}}});
        ASSERT_EQ(sel.outcomes.size(), 1u);
        EXPECT_NEAR(sel.accepted_probability(), 0.5, 1e-12);
        EXPECT_NEAR(sel.discarded_probability, 0.5, 1e-12);
        EXPECT_EQ(sel.outcomes[0].label, "count(T1,T1')=1 count(T2,T2')=1");
    }
}

TEST(PostSelect, OnePhotonAtTheAomInputs) {
    // Middle two terms of the four-photon product, each with amplitude 1/2.
    PostSelection sel = checked(sources(), HeraldRule{{{{"2", "3"}, 1}}});
    EXPECT_NEAR(sel.accepted_probability(), 0.5, 1e-12);
    EXPECT_EQ(sel.outcomes[0].conditional_state.size(), 2u);
}

TEST(PostSelect, ImpossibleCountAcceptsNothing) {
    PostSelection sel = checked(sources(), HeraldRule{{{{"1", "2"}, 7}}});
    EXPECT_TRUE(sel.outcomes.empty());
    EXPECT_NEAR(sel.discarded_probability, 1.0, 1e-12);
}

TEST(PostSelect, PerPathDropsHeraldedPaths) {
    HeraldRule rule{{{{"T", "T'"}, 1}}};
    rule.resolution = Resolution::PerPath;
    PostSelection sel = checked(ghz_evolved(), rule);
    ASSERT_EQ(sel.outcomes.size(), 2u);
    for (const auto &o : sel.outcomes) {
        EXPECT_NEAR(o.probability, 0.25, 1e-12);
        EXPECT_FALSE(o.conditional_state.paths().contains("T"));
        EXPECT_FALSE(o.conditional_state.paths().contains("T'"));
        for (const auto &[k, a] : o.conditional_state.terms()) {
            EXPECT_EQ(k.total_photons(), 3);
        }
    }
}

TEST(PostSelect, KeepComplementReportsRejectedPatterns) {
    HeraldRule rule{{{{"T", "T'"}, 1}}};
    rule.discard_complement = false;
    PostSelection sel = checked(ghz_evolved(), rule);
    EXPECT_EQ(sel.discarded_probability, 0.0);
    ASSERT_EQ(sel.outcomes.size(), 3u);
    int rejected = 0;
    for (const auto &o : sel.outcomes) {
        rejected += o.accepted ? 0 : 1;
    }
    EXPECT_EQ(rejected, 2);
}

TEST(PostSelect, OverlappingClausesRejected) {
    EXPECT_THROW(post_select(sources(), HeraldRule{{{{"1", "2"}, 1}, {{"2", "3"}, 1}}}), Error);
}

TEST(PostSelect, CompletenessOnRandomStates) {
    std::mt19937_64 rng(37);
    std::vector<ModeLabel> modes{{"a", 0}, {"a", 1}, {"b", 0}, {"c", 0}, {"c", 1}, {"d", 2}};
    std::uniform_int_distribution<int> count(0, 3);
    for (int i = 0; i < 200; ++i) {
        StateVector s = freqbin::testing::random_state(rng, modes, 1 + i % 4, 1 + i % 8);
        HeraldRule rule{{{{"a"}, count(rng)}, {{"c", "d"}, count(rng)}}};
        rule.discard_complement = i % 2 == 0;
        rule.resolution = i % 3 == 0 ? Resolution::PerPath : Resolution::Pattern;
        checked(s, rule);
    }
}

TEST(EnumerateOutcomes, BellStateOnePath) {
    StateVector bell;
    bell.add(FockKet{{"a", 0}, {"b", 0}}, freqbin::testing::kInvSqrt2);
    bell.add(FockKet{{"a", 1}, {"b", 1}}, freqbin::testing::kInvSqrt2);
    auto dist = enumerate_outcomes(bell, {"a"});
    ASSERT_EQ(dist.size(), 1u);
    EXPECT_NEAR(dist.at(1), 1.0, 1e-15);
}

TEST(EnumerateOutcomes, SwapStateAtFirstAom) {
    // Per term: 2 photons (1/4), one photon (2 x 1/4), none (1/4).
    for (Convention c : {Convention::Unitary, Convention::PaperLiteral}) {
        auto dist = enumerate_outcomes(swap_evolved(c), {"T1", "T1'"});
        EXPECT_NEAR(dist.at(2), 0.25, 1e-12);
        EXPECT_NEAR(dist.at(1), 0.5, 1e-12);
        EXPECT_NEAR(dist.at(0), 0.25, 1e-12);
    }
}

TEST(EnumerateOutcomes, GhzDetectors) {
    auto dist = enumerate_outcomes(ghz_evolved(), {"T", "T'"});
    EXPECT_NEAR(dist.at(1), 0.5, 1e-12);
    EXPECT_NEAR(dist.at(0) + dist.at(2), 0.5, 1e-12);
    double total = 0.0;
    for (const auto &[n, p] : dist) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
}
