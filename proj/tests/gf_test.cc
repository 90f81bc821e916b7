// Copyright 2026 The xtskit Authors.
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

#include "xtskit/gf.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.h"
#include "xtskit/error.h"

namespace xtskit::gf {
namespace {

Block RandomBlock(std::mt19937_64& rng, std::size_t bytes) {
  return Block::FromBytes(oracle::RandomBytes(rng, bytes));
}

oracle::Bytes Vec(const Block& b) { return {b.bytes().begin(), b.bytes().end()}; }

TEST(FieldTest, StandardModulus) {
  const FieldSpec f = FieldSpec::Standard();
  EXPECT_EQ(f.width_bits, 128u);
  EXPECT_EQ(f.reduction.ToHex(), "87000000000000000000000000000000");
}

TEST(MulAlphaTest, ShiftWithoutCarry) {
  const FieldSpec f = FieldSpec::Standard();
  EXPECT_EQ(MulAlpha(Block::FromHex("01000000000000000000000000000000"), f).ToHex(),
            "02000000000000000000000000000000");
}

TEST(MulAlphaTest, CarryOutFoldsIntoByteZero) {
  const FieldSpec f = FieldSpec::Standard();
  EXPECT_EQ(MulAlpha(Block::FromHex("00000000000000000000000000000080"), f).ToHex(),
            "87000000000000000000000000000000");
}

TEST(MulAlphaTest, CarryBetweenBytes) {
  const FieldSpec f = FieldSpec::Standard();
  EXPECT_EQ(MulAlpha(Block::FromHex("80000000000000000000000000000000"), f).ToHex(),
            "00010000000000000000000000000000");
}

TEST(MulAlphaTest, PinsByteOrderOnReferenceTweaks) {
  const FieldSpec f = FieldSpec::Standard();
  EXPECT_EQ(MulAlpha(Block::FromHex("6752ca5febca0f3fc8dc9dfc2a916295"), f).ToHex(),
            "49a494bfd6951f7e90b93bf95522c52a");
}

TEST(MulAlphaTest, WidthMismatchThrows) {
  EXPECT_THROW(MulAlpha(Block(2), FieldSpec::Standard()), ContractError);
}

TEST(MulAlphaTest, MatchesPolynomialOracleExhaustivelyAtWidth16) {
  const FieldSpec f = FieldSpec::ForWidth(16);
  const std::vector<int> terms = {5, 3, 1, 0};
  for (std::uint32_t v = 0; v < 65536; ++v) {
    const oracle::Bytes a = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8)};
    ASSERT_EQ(Vec(MulAlpha(Block::FromBytes(a), f)), oracle::PolyMulX(a, terms)) << v;
  }
}

TEST(MulAlphaTest, MatchesPolynomialOracleAtWidth128) {
  const FieldSpec f = FieldSpec::Standard();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const oracle::Bytes a = oracle::RandomBytes(rng, 16);
    ASSERT_EQ(Vec(MulAlpha(Block::FromBytes(a), f)),
              oracle::PolyMulX(a, oracle::StandardTerms()));
  }
}

TEST(MulTest, IdentityAndAlpha) {
  std::mt19937_64 rng(1);
  for (std::size_t w : {16u, 24u, 32u, 128u}) {
    const FieldSpec f = FieldSpec::ForWidth(w);
    for (int i = 0; i < 200; ++i) {
      const Block a = RandomBlock(rng, w / 8);
      EXPECT_EQ(Mul(a, One(f), f), a);
      EXPECT_EQ(Mul(a, Alpha(f), f), MulAlpha(a, f));
    }
  }
}

TEST(MulTest, MatchesPolynomialOracle) {
  std::mt19937_64 rng(2);
  const FieldSpec f = FieldSpec::Standard();
  for (int i = 0; i < 300; ++i) {
    const oracle::Bytes a = oracle::RandomBytes(rng, 16), b = oracle::RandomBytes(rng, 16);
    ASSERT_EQ(Vec(Mul(Block::FromBytes(a), Block::FromBytes(b), f)),
              oracle::PolyMulMod(a, b, oracle::StandardTerms()));
  }
}

TEST(MulTest, CommutativeAndAssociative) {
  std::mt19937_64 rng(3);
  for (std::size_t w : {16u, 128u}) {
    const FieldSpec f = FieldSpec::ForWidth(w);
    for (int i = 0; i < 1000; ++i) {
      const Block a = RandomBlock(rng, w / 8), b = RandomBlock(rng, w / 8),
                  c = RandomBlock(rng, w / 8);
      ASSERT_EQ(Mul(a, b, f), Mul(b, a, f));
      ASSERT_EQ(Mul(a, Mul(b, c, f), f), Mul(Mul(a, b, f), c, f));
    }
  }
}

TEST(MulTest, MultiplicationByNonzeroIsBijectiveAtWidth16) {
  const FieldSpec f = FieldSpec::ForWidth(16);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t av = 0;
    while (av == 0) av = rng() & 0xffff;
    const Block a = Block::FromBytes(oracle::Bytes{static_cast<std::uint8_t>(av),
                                                   static_cast<std::uint8_t>(av >> 8)});
    std::vector<bool> seen(65536, false);
    for (std::uint32_t v = 0; v < 65536; ++v) {
      const Block b = Block::FromBytes(oracle::Bytes{static_cast<std::uint8_t>(v),
                                                     static_cast<std::uint8_t>(v >> 8)});
      const Block p = Mul(a, b, f);
      const std::uint32_t pv = p[0] | (p[1] << 8);
      ASSERT_FALSE(seen[pv]);
      seen[pv] = true;
    }
  }
}

TEST(MulTest, WidthMismatchThrows) {
  EXPECT_THROW(Mul(Block(16), Block(2), FieldSpec::Standard()), ContractError);
}

TEST(AlphaPowTest, MatchesIteratedMulAlpha) {
  std::mt19937_64 rng(5);
  for (std::size_t w : {16u, 24u, 32u, 128u}) {
    const FieldSpec f = FieldSpec::ForWidth(w);
    for (int i = 0; i < 20; ++i) {
      const Block b = RandomBlock(rng, w / 8);
      Block it = b;
      for (std::uint64_t j = 0; j <= 300; ++j) {
        ASSERT_EQ(AlphaPow(b, j, f), it) << w << " " << j;
        it = MulAlpha(it, f);
      }
    }
  }
}

TEST(AlphaPowTest, ExponentsAdd) {
  std::mt19937_64 rng(6);
  const FieldSpec f = FieldSpec::Standard();
  for (int t = 0; t < 200; ++t) {
    const Block b = RandomBlock(rng, 16);
    const std::uint64_t i = rng() % 129, j = rng() % 129;
    ASSERT_EQ(AlphaPow(b, i + j, f), Mul(AlphaPow(b, i, f), AlphaPow(One(f), j, f), f));
  }
}

TEST(AlphaPowTest, LargeExponentMatchesSquaring) {
  const FieldSpec f = FieldSpec::Standard();
  const Block a = Alpha(f);
  // alpha^(2^20) by twenty squarings.
  Block sq = a;
  for (int i = 0; i < 20; ++i) sq = Mul(sq, sq, f);
  EXPECT_EQ(AlphaPow(One(f), std::uint64_t{1} << 20, f), sq);
}

TEST(IrreducibleTest, StandardModulus) {
  EXPECT_TRUE(VerifyIrreducible(FieldSpec::Standard()));
}

TEST(IrreducibleTest, ToyDefaults) {
  for (std::size_t w : {16u, 24u, 32u}) {
    EXPECT_TRUE(VerifyIrreducible(FieldSpec::ForWidth(w))) << w;
  }
}

TEST(IrreducibleTest, ReducibleCandidates) {
  // x^16 + x + 1 and x^16 + 1 = (x + 1)^16.
  EXPECT_FALSE(VerifyIrreducible(FieldSpec::FromReduction(16, 0x3)));
  EXPECT_FALSE(VerifyIrreducible(FieldSpec::FromReduction(16, 0x1)));
  // Even reduction: x divides the modulus.
  EXPECT_FALSE(VerifyIrreducible(FieldSpec::FromReduction(16, 0x2a)));
}

TEST(IrreducibleTest, Width16DefaultModulus) {
  EXPECT_EQ(FieldSpec::ForWidth(16).reduction.ToHex(), "2b00");
}

TEST(IrreducibleTest, RabinAgreesWithTrialDivisionAtWidth16) {
  for (std::uint64_t r = 1; r < 512; r += 2) {
    const FieldSpec f = FieldSpec::FromReduction(16, r);
    ASSERT_EQ(detail::IrreducibleByRabin(f), detail::IrreducibleByTrialDivision(f)) << r;
  }
}

TEST(IrreducibleTest, CountOfDegree8Irreducibles) {
  // There are exactly 30 irreducible polynomials of degree 8 over GF(2).
  int count = 0;
  for (std::uint64_t r = 0; r < 256; ++r) {
    count += detail::IrreducibleByTrialDivision(FieldSpec::FromReduction(8, r)) ? 1 : 0;
  }
  EXPECT_EQ(count, 30);
}

}  // namespace
}  // namespace xtskit::gf
