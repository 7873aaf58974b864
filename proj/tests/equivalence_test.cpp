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

TEST(MonomialMap, GroupLaws) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 40;
        const MonomialMap f = MonomialMap::random(n, rng), g = MonomialMap::random(n, rng);
        ASSERT_TRUE(f.is_valid());
        const Gf4Vector x = testing::random_vector(rng, n);
        EXPECT_EQ(f.then(g).apply(x), g.apply(f.apply(x)));
        EXPECT_EQ(f.inverse().apply(f.apply(x)), x);
        EXPECT_EQ(f.then(f.inverse()), MonomialMap::identity(n));
        EXPECT_EQ(f.apply(x).weight(), x.weight());
    }
}

TEST(MonomialMap, PreservesHermitianProduct) {
    std::mt19937_64 rng(62);
    const MonomialMap f = MonomialMap::random(30, rng);
    for (int t = 0; t < 50; ++t) {
        const Gf4Vector x = testing::random_vector(rng, 30), y = testing::random_vector(rng, 30);
        EXPECT_EQ(hermitian_inner(f.apply(x), f.apply(y)), hermitian_inner(x, y));
    }
}

TEST(Equivalence, RandomImagesAreFoundWithVerifiedMaps) {
    std::mt19937_64 rng(63);
    for (const char* name : {"C_{24,1,1}", "C_{24,w,5}", "C_{28,1,2}", "C_{32,v,7}"}) {
        const LinearCode c = known_code(name).record().build();
        const MonomialMap m = MonomialMap::random(c.length(), rng);
        const LinearCode image = m.apply(c);
        const auto res = are_equivalent(c, image);
        ASSERT_EQ(res.verdict, EquivalenceVerdict::equivalent) << name;
        ASSERT_TRUE(res.map.has_value());
        EXPECT_FALSE(res.conjugated);
        EXPECT_EQ(res.map->apply(c), image) << name;
    }
}

TEST(Equivalence, DistinctWeightCountsAreInequivalent) {
    const LinearCode a = known_code("C_{24,1,1}").record().build();
    const LinearCode b = known_code("C_{24,1,2}").record().build();
    EXPECT_EQ(are_equivalent(a, b).verdict, EquivalenceVerdict::inequivalent);
    EXPECT_EQ(are_equivalent(a, LinearCode::full_space(24)).verdict, EquivalenceVerdict::inequivalent);
}

TEST(Equivalence, OmegaAndOmegaBarLength24CodesPairUp) {
    for (int i = 1; i <= 9; ++i) {
        const std::string s = std::to_string(i);
        const LinearCode a = known_code("C_{24,w," + s + "}").record().build();
        const LinearCode b = known_code("C_{24,v," + s + "}").record().build();
        const auto res = are_equivalent(a, b);
        ASSERT_EQ(res.verdict, EquivalenceVerdict::equivalent) << i;
        EXPECT_FALSE(res.conjugated);
        EXPECT_EQ(res.map->apply(a), b);
    }
}

TEST(Equivalence, SemilinearOptionHandlesConjugates) {
    const LinearCode c = known_code("C_{24,1,3}").record().build();
    std::mt19937_64 rng(64);
    const LinearCode target = MonomialMap::random(24, rng).apply(c.conj());
    EquivalenceOptions opt;
    opt.semilinear = true;
    const auto res = are_equivalent(c, target, opt);
    ASSERT_EQ(res.verdict, EquivalenceVerdict::equivalent);
    const LinearCode source = res.conjugated ? c.conj() : c;
    EXPECT_EQ(res.map->apply(source), target);
}

TEST(Equivalence, SignatureIsInvariant) {
    std::mt19937_64 rng(65);
    const LinearCode c = known_code("C_{28,1,1}").record().build();
    EXPECT_EQ(signature(c), signature(MonomialMap::random(28, rng).apply(c)));
}

TEST(Equivalence, DedupSplitsListedCodesIntoClasses) {
    std::vector<LinearCode> codes;
    for (const auto& e : known_codes("T2"))
        if (e.name.find(",1,") == std::string::npos) codes.push_back(e.record().build());
    ASSERT_EQ(codes.size(), 18u);
    const auto rep = dedup_by_equivalence(codes);
    EXPECT_EQ(rep.representatives.size(), 9u);
    EXPECT_TRUE(rep.undecided.empty());
    // Codes i of the w and v lists share a class.
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(rep.class_of[i], rep.class_of[9 + i]);
}

}  // namespace
}  // namespace qsd
