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

using testing::random_vector;

TEST(Gf4, TablesMatchPolynomialOracle) {
    const auto r = testing::check_field_tables();
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Gf4, FieldAxioms) {
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) {
                const Gf4 x = Gf4::from_bits(a), y = Gf4::from_bits(b), z = Gf4::from_bits(c);
                EXPECT_EQ(x * (y + z), x * y + x * z);
                EXPECT_EQ((x * y) * z, x * (y * z));
                EXPECT_EQ(x * y, y * x);
            }
    EXPECT_EQ(Gf4::omega() * Gf4::omega(), Gf4::omega_bar());
    EXPECT_EQ(Gf4::omega() + Gf4::one(), Gf4::omega_bar());
    EXPECT_EQ(Gf4::omega().conj(), Gf4::omega_bar());
    EXPECT_THROW(Gf4::zero().inverse(), std::domain_error);
}

TEST(Gf4, SymbolParsing) {
    EXPECT_EQ(Gf4Vector::from_string("01wv").to_string(), "01wv");
    EXPECT_THROW(Gf4::from_char('2'), std::invalid_argument);
    EXPECT_THROW(Gf4Vector::from_string("01x"), std::invalid_argument);
}

TEST(Gf4Vector, PlaneScalingMatchesSymbolwise) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 200;
        const Gf4Vector x = random_vector(rng, n);
        for (Gf4 s : {Gf4::zero(), Gf4::one(), Gf4::omega(), Gf4::omega_bar()}) {
            const Gf4Vector y = x.scaled(s);
            for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(y[i], s * x[i]);
        }
        const Gf4Vector c = x.conj();
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(c[i], x[i].conj());
    }
}

TEST(Gf4Vector, NormalizedHasLeadingOne) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        const Gf4Vector x = random_vector(rng, 70);
        if (x.is_zero()) continue;
        const Gf4Vector y = x.normalized();
        EXPECT_EQ(y[y.first_nonzero()], Gf4::one());
        EXPECT_EQ(x.first_nonzero(), y.first_nonzero());
        EXPECT_EQ(y, x.scaled(x[x.first_nonzero()].inverse()));
    }
}

TEST(Gf4Vector, InnerProductsMatchDefinition) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 130;
        const Gf4Vector x = random_vector(rng, n), y = random_vector(rng, n);
        Gf4 h = Gf4::zero(), e = Gf4::zero();
        for (std::size_t i = 0; i < n; ++i) {
            h += x[i] * y[i].conj();
            e += x[i] * y[i];
        }
        EXPECT_EQ(hermitian_inner(x, y), h);
        EXPECT_EQ(euclidean_inner(x, y), e);
    }
}

TEST(Gf4Vector, LengthMismatchThrows) {
    EXPECT_THROW(Gf4Vector(3) += Gf4Vector(4), std::invalid_argument);
}

TEST(Gf4Matrix, ProductMatchesNaive) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        const std::size_t a = 1 + rng() % 9, b = 1 + rng() % 9, c = 1 + rng() % 9;
        Gf4Matrix x(a, b), y(b, c);
        for (std::size_t i = 0; i < a; ++i) x.row(i) = random_vector(rng, b);
        for (std::size_t i = 0; i < b; ++i) y.row(i) = random_vector(rng, c);
        EXPECT_EQ(x * y, testing::naive_product(x, y));
        EXPECT_EQ((x * y).conj_transpose(), y.conj_transpose() * x.conj_transpose());
        EXPECT_EQ(x.transpose().transpose(), x);
    }
}

}  // namespace
}  // namespace qsd
