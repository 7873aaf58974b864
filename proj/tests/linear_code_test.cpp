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

using testing::random_code;
using testing::random_vector;

TEST(LinearCode, DualIsAnInvolution) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 40;
        const LinearCode c = random_code(rng, n, 1 + rng() % (n - 1));
        if (c.is_zero_code()) continue;
        const LinearCode d = c.hermitian_dual();
        EXPECT_EQ(c.dimension() + d.dimension(), n);
        for (const auto& x : c.rows())
            for (const auto& y : d.rows()) ASSERT_TRUE(hermitian_inner(x, y).is_zero());
        EXPECT_EQ(d.hermitian_dual(), c);
    }
}

TEST(LinearCode, EncodeAndCoordinatesInvert) {
    std::mt19937_64 rng(32);
    const LinearCode c = random_code(rng, 30, 9);
    for (int t = 0; t < 50; ++t) {
        std::vector<Gf4> u(c.dimension());
        for (auto& s : u) s = testing::random_symbol(rng);
        const Gf4Vector x = c.encode(u);
        EXPECT_TRUE(c.contains(x));
        EXPECT_EQ(c.coordinates(x), u);
    }
}

TEST(LinearCode, ContainsRejectsOutsideWords) {
    const LinearCode c = LinearCode::from_rows({Gf4Vector::from_string("1100"), Gf4Vector::from_string("0011")}, 4);
    EXPECT_TRUE(c.contains(Gf4Vector::from_string("wwvv")));
    EXPECT_FALSE(c.contains(Gf4Vector::from_string("1000")));
    EXPECT_TRUE(LinearCode::zero(4).is_subcode_of(c));
    EXPECT_TRUE(c.is_subcode_of(LinearCode::full_space(4)));
}

TEST(LinearCode, HexacodeIsSelfDual) {
    // Generator (I_3 | M) with M conj(M)^T = I_3.
    const Gf4Matrix m = Gf4Matrix::from_rows(
        {Gf4Vector::from_string("1wv"), Gf4Vector::from_string("1vw"), Gf4Vector::from_string("111")});
    EXPECT_TRUE(identity_criterion(m));
    const LinearCode hexacode = LinearCode::from_generator(Gf4Matrix::identity(3).hstack(m));
    EXPECT_TRUE(hexacode.is_hermitian_self_dual());
    EXPECT_TRUE(testing::naive_self_dual(hexacode));
}

TEST(LinearCode, ConjugateCodeIsConjugateSpan) {
    std::mt19937_64 rng(33);
    const LinearCode c = random_code(rng, 20, 6);
    const LinearCode cc = c.conj();
    for (const auto& r : c.rows()) EXPECT_TRUE(cc.contains(r.conj()));
    EXPECT_EQ(cc.conj(), c);
}

TEST(CodeFile, RoundTrip) {
    std::mt19937_64 rng(34);
    std::ostringstream out;
    std::vector<LinearCode> codes;
    for (int t = 0; t < 5; ++t) {
        codes.push_back(random_code(rng, 10 + t, 3 + t));
        write_code(out, codes.back());
        out << "# separator comment\n\n";
    }
    std::istringstream in(out.str());
    const auto back = read_codes(in);
    ASSERT_EQ(back.size(), codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) EXPECT_EQ(back[i], codes[i]);
    EXPECT_EQ(parse_code(to_code_text(codes[0])), codes[0]);
}

TEST(CodeFile, MalformedInputIsRejected) {
    EXPECT_THROW(parse_code("n=4 k=2\n1100\n"), std::runtime_error);
    EXPECT_THROW(parse_code("n=4 k=1\n110\n"), std::runtime_error);
    EXPECT_THROW(parse_code("n=4 k=2\n1100\nww00\n"), std::runtime_error);
    EXPECT_THROW(parse_code("length 4\n"), std::runtime_error);
    EXPECT_THROW(parse_code("n=3 k=1\n1x0\n"), std::invalid_argument);
}

}  // namespace
}  // namespace qsd
