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

void expect_matches_distribution(const GleasonSolution& sol, const std::vector<BigRational>& values,
                                 const std::map<int, std::uint64_t>& counts) {
    for (int i = 0; i <= sol.n; ++i) {
        const auto it = counts.find(i);
        const BigRational expect = it == counts.end() ? 0 : BigRational(it->second);
        EXPECT_EQ(sol.weights[i].evaluate(values), expect) << "A" << i;
    }
}

TEST(Gleason, BasisExpansion) {
    // (1 + 3y^2)^2 = 1 + 6y^2 + 9y^4.
    const auto p = expand_basis(4, 0);
    EXPECT_EQ(p, (std::vector<BigInt>{1, 0, 6, 0, 9}));
    // y^2 (1 - y^2)^2 at n = 6.
    EXPECT_EQ(expand_basis(6, 1), (std::vector<BigInt>{0, 0, 1, 0, -2, 0, 1}));
}

TEST(Gleason, Length24MatchesEnumeratedCode) {
    const LinearCode c = known_code("C_{24,1,1}").record().build();
    const auto ex = min_weight_exhaustive(c);
    const auto sol = solve_possible_enumerator(24, 8, {"a8"});
    expect_matches_distribution(sol, {BigRational(513)}, ex.counts);
}

TEST(Gleason, ExtremalLength28IsUnique) {
    const auto sol = solve_possible_enumerator(28, 10, {});
    EXPECT_EQ(gleason_free_parameters(28, 10), 0);
    const LinearCode c = known_code("C_{28,1,1}").record().build();
    expect_matches_distribution(sol, {}, min_weight_exhaustive(c).counts);
}

TEST(Gleason, HexacodeEnumerator) {
    // The hexacode has 45 words of weight 4 and 18 of weight 6.
    const auto sol = solve_possible_enumerator(6, 4, {});
    EXPECT_EQ(sol.weights[4].constant(), 45);
    EXPECT_EQ(sol.weights[6].constant(), 18);
}

TEST(Gleason, Length56PublishedRows) {
    const auto sol = solve_possible_enumerator(56, 16, {"alpha", "beta"});
    const auto rows = published_w56();
    ASSERT_EQ(rows.size(), 22u);
    for (const auto& r : rows) {
        const ParamPoly& p = sol.weights.at(r.weight);
        EXPECT_EQ(p.constant(), BigRational(BigInt(r.constant))) << r.weight;
        EXPECT_EQ(p.coeff(0), r.alpha) << r.weight;
        EXPECT_EQ(p.coeff(1), r.beta) << r.weight;
    }
    const ParamPoly total = sol.total();
    EXPECT_TRUE(total.is_constant());
    EXPECT_EQ(total.constant(), BigRational(BigInt(1) << 56));
    EXPECT_EQ(sol.weights[16].to_string(sol.params), "alpha");
}

TEST(Gleason, Length56CountsFromHeadlineCodes) {
    // Both headline codes must give nonnegative integral enumerators.
    const auto sol = solve_possible_enumerator(56, 16, {"alpha", "beta"});
    for (const char* name : {"C_{56,1}", "C_{56,w}"}) {
        const auto e = known_code(name);
        const std::vector<BigRational> v{BigRational(e.claim("A16")), BigRational(e.claim("A18"))};
        for (const auto& w : sol.weights) EXPECT_GE(w.evaluate(v), 0) << name;
    }
}

TEST(Gleason, TotalIsFourToHalfLength) {
    for (int n = 2; n <= 60; n += 2) {
        const int d = 2;
        const int free = gleason_free_parameters(n, d);
        std::vector<std::string> names;
        for (int i = 0; i < free; ++i) names.push_back("p" + std::to_string(i));
        const auto sol = solve_possible_enumerator(n, d, names);
        EXPECT_TRUE(sol.total().is_constant()) << n;
        EXPECT_EQ(sol.total().constant(), BigRational(BigInt(1) << n)) << n;
    }
}

TEST(Gleason, InconsistentAboveTheBound) {
    EXPECT_THROW(solve_possible_enumerator(24, 12, {}), InconsistentSystem);
    EXPECT_THROW(solve_possible_enumerator(28, 12, {}), InconsistentSystem);
    EXPECT_THROW(solve_possible_enumerator(24, 8, {}), std::invalid_argument);
    EXPECT_THROW(solve_possible_enumerator(25, 8, {"a"}), std::invalid_argument);
}

TEST(Gleason, CsvLayout) {
    const auto sol = solve_possible_enumerator(56, 16, {"alpha", "beta"});
    std::istringstream in(sol.to_csv());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "weight,constant,alpha,beta");
    std::getline(in, line);
    EXPECT_EQ(line, "0,1,0,0");
    std::getline(in, line);
    EXPECT_EQ(line, "16,0,1,0");
}

TEST(BoundCheck, Extremality) {
    EXPECT_TRUE(check_bound(28, 10).extremal);
    EXPECT_FALSE(check_bound(56, 16).extremal);
    EXPECT_TRUE(check_bound(56, 16).within);
    EXPECT_FALSE(check_bound(24, 12).within);
}

}  // namespace
}  // namespace qsd
