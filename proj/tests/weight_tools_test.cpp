// Copyright 2026 The qsd Authors
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

#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace qsd {
namespace {

TEST(MinWeight, ExhaustiveAndInformationSetAgree) {
    const auto r = testing::check_min_weight_routes(51, 120, known_codes("T2"), 0);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_GE(r.cases, 100u);
}

TEST(MinWeight, SelfDualCodesHaveEvenWeights) {
    const auto r = testing::check_even_weights(known_codes("T2"), 52);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(MinWeight, InvariantUnderScalingAndMonomialMaps) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        const LinearCode c = testing::random_code(rng, 20 + rng() % 20, 6);
        const MonomialMap m = MonomialMap::random(c.length(), rng);
        const LinearCode image = m.apply(c);
        const auto a = min_weight_exhaustive(c), b = min_weight_exhaustive(image);
        EXPECT_EQ(a.counts, b.counts);
        EXPECT_EQ(min_weight_info_set(image).min_weight, a.min_weight);
        // Scaling rows leaves the code unchanged.
        std::vector<Gf4Vector> rows;
        for (const auto& r : c.rows()) rows.push_back(r.scaled(testing::random_nonzero(rng)));
        EXPECT_EQ(LinearCode::from_rows(rows, c.length()), c);
    }
}

TEST(MinWeight, WitnessHasMinimumWeight) {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 20; ++t) {
        const LinearCode c = testing::random_code(rng, 30, 10);
        const auto rep = min_weight_info_set(c);
        ASSERT_TRUE(rep.certified);
        EXPECT_TRUE(c.contains(rep.witness));
        EXPECT_EQ(static_cast<int>(rep.witness.weight()), rep.min_weight);
        EXPECT_LE(rep.lower_bound, rep.min_weight);
    }
}

TEST(MinWeight, ResultsIndependentOfThreadCount) {
    const LinearCode c = known_code("C_{32,1,1}").record().build();
    EnumerationBudget one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = weight_report(c, {10, 12}, one), b = weight_report(c, {10, 12}, four);
    EXPECT_EQ(a.min_weight, b.min_weight);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(light_words(c, 10, 10, one), light_words(c, 10, 10, four));
}

TEST(MinWeight, LightWordsAreNormalizedCodewords) {
    const LinearCode c = known_code("C_{24,1,1}").record().build();
    const auto words = light_words(c, 8, 8);
    EXPECT_EQ(3 * words.size(), 513u);
    for (const auto& w : words) {
        EXPECT_TRUE(c.contains(w));
        EXPECT_EQ(w.weight(), 8u);
        EXPECT_EQ(w, w.normalized());
    }
}

TEST(MinWeight, BudgetIsEnforced) {
    const LinearCode c = known_code("C_{56,1}").record().build();
    EnumerationBudget b;
    b.max_window_weight = 1;
    EXPECT_THROW(count_words(c, {16}, b), BudgetExceeded);
    EnumerationBudget quick;
    quick.max_seconds = 0.5;
    EXPECT_THROW(min_weight_exhaustive(c, quick), BudgetExceeded);
    EXPECT_THROW(count_words(c, {57}), std::invalid_argument);
}

TEST(ExtremalBound, Values) {
    EXPECT_EQ(extremal_bound(24), 10);
    EXPECT_EQ(extremal_bound(28), 10);
    EXPECT_EQ(extremal_bound(30), 12);
    EXPECT_EQ(extremal_bound(56), 20);
    EXPECT_THROW(extremal_bound(7), std::invalid_argument);
}

TEST(InfoSets, AreDisjointAndHaveFullRankFirst) {
    std::mt19937_64 rng(55);
    const LinearCode c = testing::random_code(rng, 40, 10);
    const auto sets = disjoint_info_sets(c);
    ASSERT_FALSE(sets.empty());
    EXPECT_EQ(sets.front().rank, c.dimension());
    std::vector<int> seen(c.length(), 0);
    for (const auto& s : sets)
        for (auto col : s.columns) EXPECT_EQ(seen[col]++, 0);
}

}  // namespace
}  // namespace qsd
