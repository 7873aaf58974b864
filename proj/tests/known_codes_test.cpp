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

TEST(Dataset, ChecksumIsPinned) { EXPECT_EQ(known_dataset_checksum(), 0x3c50900a24400eb2ULL); }

TEST(Dataset, TableSizes) {
    const std::map<std::string, std::size_t> sizes{{"T2", 25},    {"T3", 9},     {"T4", 3},  {"T5", 6},
                                                   {"T32-1", 59}, {"T32-2", 59}, {"T32-3", 59},
                                                   {"T9", 30},    {"G", 3}};
    for (const auto& [t, n] : sizes) EXPECT_EQ(known_codes(t).size(), n) << t;
    EXPECT_EQ(published_w56().size(), 22u);
    EXPECT_TRUE(known_codes("T7").empty());
}

TEST(Dataset, NamesAreUnique) {
    std::set<std::string> names;
    for (const auto& e : known_codes()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
}

TEST(Dataset, BoundsAreOrdered) {
    const auto b = known_bounds();
    for (const auto& [n, r] : b.d_range) EXPECT_LE(r.lo, r.hi) << n;
    for (const auto& [key, r] : b.d_mu_range) EXPECT_LE(r.lo, r.hi) << key.first;
    EXPECT_LE(b.d4_56_28.lo, b.d4_56_28.hi);
    EXPECT_EQ(b.dmax_56_0.lo, 16);
    EXPECT_EQ(b.dmax_56_0.hi, 20);
    EXPECT_EQ(b.dk.at(56), 14);
}

TEST(Dataset, FourCirculantLowerBoundsAreWitnessed) {
    const auto b = known_bounds();
    const auto codes = known_codes();
    for (const auto& [key, r] : b.d_mu_range) {
        bool witnessed = false;
        for (const auto& e : codes) {
            if (!e.has_claim("d")) continue;
            const auto rec = e.record();
            if (rec.kind != ConstructionRecord::Kind::four_circulant) continue;
            if (static_cast<int>(4 * rec.row_a.size()) == key.first && rec.mu.to_char() == key.second &&
                e.claim("d") == r.lo)
                witnessed = true;
        }
        EXPECT_TRUE(witnessed) << "n=" << key.first << " mu=" << key.second;
    }
}

TEST(Dataset, EntriesAreSelfDualByTheFirstRowCondition) {
    for (const auto& e : known_codes()) {
        const auto rec = e.record();
        if (rec.kind != ConstructionRecord::Kind::four_circulant) continue;
        EXPECT_TRUE(is_self_dual_condition(rec.four_circulant())) << e.name;
    }
}

TEST(Dataset, UnknownNamesThrow) { EXPECT_THROW(known_code("C_{0,0}"), std::out_of_range); }

TEST(Reproduce, UnknownTableIsRejected) {
    EXPECT_THROW(reproduce(""), std::invalid_argument);
    EXPECT_THROW(reproduce("T7"), std::invalid_argument);
}

TEST(Reproduce, Length24TablePasses) {
    const auto r = reproduce("T2");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.count(ClaimStatus::fail), 0u);
    // Condition, self-duality, d and A8 for each of the 25 rows.
    EXPECT_EQ(r.count(ClaimStatus::pass), 4 * 25u);
}

TEST(Reproduce, GleasonRowsPass) {
    const auto r = reproduce("W56");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.claims.size(), 23u);
}

TEST(Reproduce, ConstructionsMarkLongJobs) {
    const auto r = reproduce("G");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.count(ClaimStatus::long_running), 2u);
}

}  // namespace
}  // namespace qsd
