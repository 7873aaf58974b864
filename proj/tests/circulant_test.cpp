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

TEST(Circulant, RingLawsOnRandomRows) {
    const auto r = testing::check_circulant_laws(21, 400);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Circulant, ShiftMatrixPowers) {
    for (Gf4 mu : kNonzero) {
        const std::size_t n = 5;
        const Gf4Matrix e = shift_matrix(n, mu);
        Gf4Matrix p = Gf4Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) p = p * e;
        // E^n = mu I.
        Gf4Matrix expect(n, n);
        for (std::size_t i = 0; i < n; ++i) expect.set(i, i, mu);
        EXPECT_EQ(p, expect);
    }
}

TEST(Circulant, ShiftIsRightMultiplicationByShiftMatrix) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const Gf4 mu = testing::random_nonzero(rng);
        const CirculantSpec a(mu, testing::random_vector(rng, n));
        const std::size_t s = rng() % (2 * n);
        Gf4Matrix es = Gf4Matrix::identity(n);
        for (std::size_t i = 0; i < s; ++i) es = es * shift_matrix(n, mu);
        EXPECT_EQ(materialize(circ_shift(a, s)), materialize(a) * es);
    }
}

TEST(Circulant, IdentityAndAddition) {
    std::mt19937_64 rng(23);
    const CirculantSpec a(Gf4::omega(), testing::random_vector(rng, 7));
    const CirculantSpec b(Gf4::omega(), testing::random_vector(rng, 7));
    EXPECT_EQ(circ_mul(a, identity_circulant(7, Gf4::omega())), a);
    EXPECT_EQ(materialize(circ_add(a, b)), materialize(a) + materialize(b));
    EXPECT_EQ(circ_conj_transpose(circ_conj_transpose(a)), a);
}

TEST(Circulant, RejectsMismatchedOperands) {
    const CirculantSpec a(Gf4::one(), Gf4Vector::from_string("1w0"));
    const CirculantSpec b(Gf4::omega(), Gf4Vector::from_string("1w0"));
    EXPECT_THROW(circ_mul(a, b), std::invalid_argument);
    EXPECT_THROW(CirculantSpec(Gf4::zero(), Gf4Vector::from_string("1")), std::invalid_argument);
}

}  // namespace
}  // namespace qsd
