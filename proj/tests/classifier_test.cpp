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

TEST(SmallRing, MatchesGeneralCirculantArithmetic) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 24;
        const Gf4 mu = testing::random_nonzero(rng);
        const SmallCirculantRing ring(n, mu);
        const Gf4Vector a = testing::random_vector(rng, n), b = testing::random_vector(rng, n);
        const SmallRow ra = ring.from_vector(a), rb = ring.from_vector(b);
        EXPECT_EQ(ring.to_vector(ra), a);
        EXPECT_EQ(ring.to_vector(ring.mul(ra, rb)), circ_mul(CirculantSpec(mu, a), CirculantSpec(mu, b)).row);
        EXPECT_EQ(ring.to_vector(ring.conj_transpose(ra)), circ_conj_transpose(CirculantSpec(mu, a)).row);
        EXPECT_EQ(ring.to_vector(ring.shift(ra)), shift_row(a, mu));
        EXPECT_EQ(ring.to_vector(ring.gram(ra)), gram_row(mu, a));
    }
}

TEST(SmallRing, OrbitMinimumIsConstantOnOrbits) {
    std::mt19937_64 rng(72);
    const SmallCirculantRing ring(7, Gf4::omega());
    for (int t = 0; t < 100; ++t) {
        const SmallRow r = ring.row_at(rng() % ring.domain_size());
        const SmallRow m = ring.orbit_min(r);
        EXPECT_EQ(ring.orbit_min(ring.shift(r)), m);
        EXPECT_EQ(ring.orbit_min(ring.scale(r, Gf4::omega_bar())), m);
        EXPECT_LE(m, r);
    }
}

TEST(Join, MatchesBruteForceForSmallBlocks) {
    const auto r = testing::check_join_brute_force();
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Join, ZeroFirstRowNeedsUnitarySecondRow) {
    for (Gf4 mu : kNonzero) {
        const SmallCirculantRing ring(5, mu);
        std::size_t zero_a = 0;
        meet_in_middle_join(5, mu, JoinDomain::all, [&](const Gf4Vector& a, const Gf4Vector& b) {
            if (!a.is_zero()) return;
            ++zero_a;
            EXPECT_EQ(gram_row(mu, b), identity_circulant(5, mu).row);
        });
        EXPECT_GT(zero_a, 0u);
    }
}

TEST(Join, ContainsListedLength24Pair) {
    const auto e = known_code("C_{24,1,1}").record();
    bool found = false;
    meet_in_middle_join(6, Gf4::one(), JoinDomain::leading_one, [&](const Gf4Vector& a, const Gf4Vector& b) {
        found = found || (a == e.row_a && b == e.row_b);
    });
    EXPECT_TRUE(found);
}

TEST(Classify, Length24Counts) {
    const std::size_t expected[3] = {7, 9, 9};
    for (int m = 0; m < 3; ++m) {
        const auto o = exhaustive_classify(6, kNonzero[m], 8);
        EXPECT_EQ(o.class_count, expected[m]);
        EXPECT_EQ(o.max_weight_found, 8);
        EXPECT_EQ(o.undecided_pairs, 0u);
        for (const auto& s : o.survivors) {
            EXPECT_TRUE(is_self_dual_condition(s.record.four_circulant()));
            EXPECT_EQ(s.d, 8);
        }
    }
}

TEST(Classify, IndependentOfWorkerCount) {
    ClassifyOptions one, three;
    one.threads = 1;
    three.threads = 3;
    const auto a = exhaustive_classify(7, Gf4::omega(), 10, one);
    const auto b = exhaustive_classify(7, Gf4::omega(), 10, three);
    ASSERT_EQ(a.survivors.size(), b.survivors.size());
    for (std::size_t i = 0; i < a.survivors.size(); ++i)
        EXPECT_EQ(a.survivors[i].record, b.survivors[i].record);
    EXPECT_EQ(a.class_count, b.class_count);
    EXPECT_EQ(a.class_count, 3u);
}

TEST(Classify, RejectsOversizedBlocks) {
    EXPECT_THROW(exhaustive_classify(13, Gf4::one(), 10), std::invalid_argument);
}

TEST(RandomSearch, ZeroTrialsGivesEmptyOutcome) {
    const auto o = random_search(14, Gf4::one(), 16, 5, 0);
    EXPECT_TRUE(o.survivors.empty());
    EXPECT_EQ(o.seed, 5u);
}

TEST(RandomSearch, ReproducibleFromSeed) {
    const auto a = random_search(6, Gf4::one(), 8, 99, 600);
    const auto b = random_search(6, Gf4::one(), 8, 99, 600);
    ASSERT_EQ(a.survivors.size(), b.survivors.size());
    for (std::size_t i = 0; i < a.survivors.size(); ++i) EXPECT_EQ(a.survivors[i].record, b.survivors[i].record);
    EXPECT_FALSE(a.survivors.empty());
    for (const auto& s : a.survivors) EXPECT_GE(s.d, 8);
}

}  // namespace
}  // namespace qsd
