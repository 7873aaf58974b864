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

TEST(FourCirculant, ConditionIffSelfDual) {
    const auto r = testing::check_condition_iff_self_dual(41, 10000);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.cases, 10000u);
}

TEST(FourCirculant, GeneratorShape) {
    std::mt19937_64 rng(42);
    const auto c = build_modified_four_circulant(Gf4::omega(), testing::random_vector(rng, 5),
                                                 testing::random_vector(rng, 5));
    const Gf4Matrix g = c.generator();
    EXPECT_EQ(g.rows(), 10u);
    EXPECT_EQ(g.cols(), 20u);
    EXPECT_EQ(c.code().dimension(), 10u);
    // Lower-left block is conj(B)^T, lower-right conj(A)^T.
    const Gf4Matrix bt = testing::naive_circulant(c.mu, c.row_b).conj_transpose();
    const Gf4Matrix at = testing::naive_circulant(c.mu, c.row_a).conj_transpose();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_EQ(g.at(5 + i, 10 + j), bt.at(i, j));
            EXPECT_EQ(g.at(5 + i, 15 + j), at.at(i, j));
        }
}

TEST(FourCirculant, VariantsOfListedLength24CodesAreEquivalent) {
    const auto r = testing::check_variants_equivalent(known_codes("T2"));
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.cases, 5 * known_codes("T2").size());
}

TEST(FourCirculant, LeadingOneCanonicalization) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        const Gf4Vector a = testing::random_vector(rng, 6), b = testing::random_vector(rng, 6);
        const auto [ca, cb] = canonicalize_leading_one(a, b);
        if (a.is_zero()) {
            EXPECT_EQ(ca, a);
            continue;
        }
        EXPECT_EQ(ca[ca.first_nonzero()], Gf4::one());
        const Gf4 s = a[a.first_nonzero()].inverse();
        EXPECT_EQ(cb, b.scaled(s));
    }
}

TEST(FourCirculant, LeadingOneRestrictionLosesNoClass) {
    const auto r = testing::check_leading_one_soundness(0);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(ConstructionRecord, RoundTripsForEveryListedCode) {
    for (const auto& e : known_codes()) {
        const ConstructionRecord r = e.record();
        EXPECT_EQ(r.to_string(), e.record_text) << e.name;
        EXPECT_EQ(parse_construction(r.to_string()), r) << e.name;
    }
}

TEST(ConstructionRecord, RejectsMalformedRecords) {
    EXPECT_THROW(parse_construction("type=m4c mu=1 rA=10"), std::runtime_error);
    EXPECT_THROW(parse_construction("type=m4c mu=1 rA=10 rB=01 extra=1"), std::runtime_error);
    EXPECT_THROW(parse_construction("type=unknown n=3"), std::runtime_error);
    EXPECT_THROW(parse_construction("type=m4c mu=1 rA=10 rB=011").build(), std::invalid_argument);
    EXPECT_THROW(parse_construction("type=cyclic n=5 g=1w").build(), std::invalid_argument);
}

TEST(Polynomial, DivisionAndCyclicCodes) {
    // x^3 - 1 = (x + 1)(x + w)(x + v) over GF(4).
    const Gf4Poly g = poly_from_string("w1");  // w + x
    EXPECT_TRUE(poly_divides(g, x_pow_minus_one(3)));
    EXPECT_FALSE(poly_divides(poly_from_string("w1"), x_pow_minus_one(5)));
    const LinearCode c = build_cyclic(3, g);
    EXPECT_EQ(c.dimension(), 2u);
    // Cyclic shifts stay in the code.
    for (const auto& r : c.rows()) {
        Gf4Vector s(3);
        for (std::size_t i = 0; i < 3; ++i) s.set((i + 1) % 3, r[i]);
        EXPECT_TRUE(c.contains(s));
    }
    Gf4Poly p = poly_from_string("1w0v00");
    EXPECT_EQ(poly_degree(p), 3);
    poly_trim(p);
    EXPECT_EQ(poly_to_string(p), "1w0v");
}

TEST(ConstructionX, GluesCosetRepresentatives) {
    // c1 = <11110>, c2 = c1 + <00011> inside GF(4)^5; aux = GF(4)^1.
    const LinearCode c1 = LinearCode::from_rows({Gf4Vector::from_string("11110")}, 5);
    const LinearCode c2 =
        LinearCode::from_rows({Gf4Vector::from_string("11110"), Gf4Vector::from_string("00011")}, 5);
    const LinearCode x = construction_x(c1, c2, LinearCode::full_space(1));
    EXPECT_EQ(x.length(), 6u);
    EXPECT_EQ(x.dimension(), 2u);
    EXPECT_TRUE(x.contains(Gf4Vector::from_string("111100")));
    // Every word outside c1 gets a nonzero tail.
    for (const auto& r : x.rows()) {
        Gf4Vector head(5);
        for (std::size_t i = 0; i < 5; ++i) head.set(i, r[i]);
        EXPECT_EQ(c1.contains(head), r[5].is_zero());
    }
    EXPECT_THROW(construction_x(c2, c1, LinearCode::full_space(1)), std::invalid_argument);
}

TEST(DoubleCirculant, PureIdentityCriterion) {
    // Generator (I | R) is self-dual when R conj(R)^T = I.
    std::mt19937_64 rng(44);
    int self_dual = 0;
    for (int t = 0; t < 2000; ++t) {
        const Gf4Vector row = testing::random_vector(rng, 3);
        const LinearCode c = build_double_circulant(row);
        const bool crit = identity_criterion(testing::naive_circulant(Gf4::one(), row));
        EXPECT_EQ(crit, c.is_hermitian_self_dual());
        self_dual += crit;
    }
    EXPECT_GT(self_dual, 0);
}

}  // namespace
}  // namespace qsd
