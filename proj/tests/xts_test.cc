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

#include "xtskit/xts.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.h"
#include "xtskit/error.h"
#include "xtskit/gf.h"
#include "xtskit/reference_vector.h"

namespace xtskit {
namespace {

using Bytes = std::vector<std::uint8_t>;

XtsKey ReferenceKey() { return {Bytes(16, 0x11), Bytes(16, 0x22)}; }

Bytes ReferencePlaintext() {
  Bytes p(16, 0x44);
  p.insert(p.end(), 16, 0x88);
  return p;
}

TEST(EncodeTest, SectorOne) {
  EXPECT_EQ(EncodeSectorNumber(1).ToHex(), "00000000000000000000000000000001");
  EXPECT_TRUE(EncodeSectorNumber(0).IsZero());
  EXPECT_EQ(EncodeSectorNumber(0x0102030405060708ULL).ToHex(),
            "00000000000000000102030405060708");
}

TEST(EncodeTest, BigEndianReproducesReferenceTweak) {
  const auto kt = MakeCipher(CipherKind::kAes128, Bytes(16, 0x22));
  EXPECT_EQ(EncryptBlock(*kt, EncodeSectorNumber(1)).ToHex(),
            "6752ca5febca0f3fc8dc9dfc2a916295");
  // The little-endian alternative does not.
  EXPECT_NE(EncryptBlock(*kt, Block::FromHex("01000000000000000000000000000000")).ToHex(),
            "6752ca5febca0f3fc8dc9dfc2a916295");
}

TEST(EncodeTest, ToyWidthsAndDecode) {
  EXPECT_EQ(EncodeSectorNumber(0x1234, 2).ToHex(), "1234");
  EXPECT_THROW(EncodeSectorNumber(0x10000, 2), SizeError);
  EXPECT_EQ(DecodeSectorNumber(EncodeSectorNumber(77)), 77u);
  EXPECT_FALSE(DecodeSectorNumber(Block::FromHex("01000000000000000000000000000000")));
}

TEST(TweakScheduleTest, ReferenceValues) {
  const auto kt = MakeCipher(CipherKind::kAes128, Bytes(16, 0x22));
  const auto t = TweakSchedule(*kt, 1, 2, gf::FieldSpec::Standard());
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].ToHex(), "6752ca5febca0f3fc8dc9dfc2a916295");
  EXPECT_EQ(t[1].ToHex(), "49a494bfd6951f7e90b93bf95522c52a");
}

TEST(TweakScheduleTest, ChainLawAndAlphaPow) {
  std::mt19937_64 rng(21);
  const gf::FieldSpec f = gf::FieldSpec::Standard();
  for (int i = 0; i < 20; ++i) {
    const auto kt = MakeCipher(CipherKind::kAes128, oracle::RandomBytes(rng, 16));
    const auto t = TweakSchedule(*kt, rng(), 21, f);
    ASSERT_EQ(t.size(), 21u);
    for (std::size_t j = 1; j < t.size(); ++j) ASSERT_EQ(t[j], gf::MulAlpha(t[j - 1], f));
    ASSERT_EQ(t[20], gf::AlphaPow(t[0], 20, f));
  }
}

TEST(XtsTest, ReferenceSector) {
  const XtsCipher xts(CipherKind::kAes128, ReferenceKey());
  const Bytes c = xts.EncryptSector(1, ReferencePlaintext());
  EXPECT_EQ(ToHex(c),
            "74a24eb9b1b6ac5e3f95ca359b8d1585"
            "65093d6dfc46548f0a9b57d5d76dc64e");
  EXPECT_EQ(xts.DecryptSector(1, c), ReferencePlaintext());
}

TEST(XtsTest, ReferenceVectorReportMatches) {
  const ReferenceReport r = RunReferenceVector();
  EXPECT_TRUE(r.AllMatch()) << r.ToText();
}

TEST(XtsTest, TamperedExpectationIsDetected) {
  ExpectedTable t = ReferenceExpected();
  t[3].hex[0] = t[3].hex[0] == 'f' ? '0' : 'f';
  EXPECT_FALSE(RunReferenceVector(t).AllMatch());
}

TEST(XtsTest, MatchesOpenSslXts) {
  std::mt19937_64 rng(22);
  for (std::size_t kb : {16u, 32u}) {
    for (std::size_t ss : {32u, 512u, 4096u}) {
      for (int i = 0; i < 30; ++i) {
        const Bytes k = oracle::RandomBytes(rng, kb), kt = oracle::RandomBytes(rng, kb);
        const std::uint64_t n = rng();
        const Bytes p = oracle::RandomBytes(rng, ss);
        const XtsCipher xts(kb == 16 ? CipherKind::kAes128 : CipherKind::kAes256, {k, kt});
        const Bytes c = xts.EncryptSector(n, p);
        ASSERT_EQ(c, oracle::AesXts(k, kt, oracle::SectorIv(n), p, true));
        ASSERT_EQ(xts.DecryptSector(n, c), p);
      }
    }
  }
}

TEST(XtsTest, ToyMatchesFormula) {
  std::mt19937_64 rng(23);
  const Bytes k = oracle::RandomBytes(rng, 8), kt = oracle::RandomBytes(rng, 8);
  const XtsCipher xts(CipherKind::kToy16, {k, kt});
  const auto ek = MakeCipher(CipherKind::kToy16, k);
  const auto ekt = MakeCipher(CipherKind::kToy16, kt);
  const std::vector<int> terms = {5, 3, 1, 0};
  for (std::uint64_t n = 0; n < 50; ++n) {
    const Bytes p = oracle::RandomBytes(rng, 8);  // J = 4
    const Bytes c = xts.EncryptSector(n, p);
    oracle::Bytes t;
    {
      const Block e = EncryptBlock(*ekt, EncodeSectorNumber(n, 2));
      t = {e[0], e[1]};
    }
    for (int j = 0; j < 4; ++j) {
      const Block pb = Block::FromBytes(std::span(p).subspan(2 * j, 2));
      const Block tb = Block::FromBytes(t);
      const Block cb = EncryptBlock(*ek, pb ^ tb) ^ tb;
      ASSERT_EQ(cb.ToHex(), ToHex(std::span(c).subspan(2 * j, 2)));
      t = oracle::PolyMulX(t, terms);
    }
    ASSERT_EQ(xts.DecryptSector(n, c), p);
  }
}

TEST(XtsTest, RoundTripAllCiphers) {
  std::mt19937_64 rng(24);
  for (CipherKind kind : {CipherKind::kAes128, CipherKind::kAes256, CipherKind::kToy16,
                          CipherKind::kToy24, CipherKind::kToy32}) {
    const std::size_t bs = BlockBytes(kind);
    for (int i = 0; i < 20; ++i) {
      const XtsCipher xts(kind, {oracle::RandomBytes(rng, KeyBytes(kind)),
                                 oracle::RandomBytes(rng, KeyBytes(kind))});
      const Bytes p = oracle::RandomBytes(rng, bs * (1 + rng() % 64));
      const std::uint64_t n = rng() % 1000;
      ASSERT_EQ(xts.DecryptSector(n, xts.EncryptSector(n, p)), p);
    }
  }
}

TEST(XtsTest, InPlaceMatchesCopy) {
  const XtsCipher xts(CipherKind::kAes128, ReferenceKey());
  Bytes buf = ReferencePlaintext();
  xts.EncryptSector(1, buf, buf);
  EXPECT_EQ(buf, xts.EncryptSector(1, ReferencePlaintext()));
}

TEST(XtsTest, ZeroSectorRoundTrip) {
  std::mt19937_64 rng(25);
  const XtsCipher xts(CipherKind::kAes256,
                      {oracle::RandomBytes(rng, 32), oracle::RandomBytes(rng, 32)});
  const Bytes z(32, 0);
  EXPECT_EQ(xts.DecryptSector(9, xts.EncryptSector(9, z)), z);
}

TEST(XtsTest, LengthErrors) {
  const XtsCipher xts(CipherKind::kAes128, ReferenceKey());
  EXPECT_THROW(xts.EncryptSector(0, Bytes(17)), SizeError);
  EXPECT_THROW(xts.EncryptSector(0, Bytes(0)), SizeError);
  EXPECT_THROW(xts.DecryptSector(0, Bytes(31)), SizeError);
}

TEST(XtsTest, OversizedSectorRejected) {
  const XtsCipher xts(CipherKind::kAes128, ReferenceKey());
  const Bytes big((std::size_t{1} << 20) * 16 + 16);
  EXPECT_THROW(xts.EncryptSector(0, big), SizeError);
}

TEST(XtsTest, SectorIndependence) {
  std::mt19937_64 rng(26);
  const XtsCipher xts(CipherKind::kAes128,
                      {oracle::RandomBytes(rng, 16), oracle::RandomBytes(rng, 16)});
  const Bytes a = oracle::RandomBytes(rng, 512);
  Bytes a2 = a;
  a2[100] ^= 1;
  const Bytes b = oracle::RandomBytes(rng, 512);
  EXPECT_NE(xts.EncryptSector(3, a), xts.EncryptSector(3, a2));
  // Sector 4's output depends only on its own input.
  EXPECT_EQ(xts.EncryptSector(4, b), xts.EncryptSector(4, b));
}

TEST(XtsTest, PositionalDistinctness) {
  std::mt19937_64 rng(27);
  const XtsCipher xts(CipherKind::kAes128,
                      {oracle::RandomBytes(rng, 16), oracle::RandomBytes(rng, 16)});
  std::set<std::string> seen;
  const Bytes p(16 * 64, 0xab);  // 64 identical blocks per sector
  for (std::uint64_t n = 0; n < 16; ++n) {
    const Bytes c = xts.EncryptSector(n, p);
    for (int j = 0; j < 64; ++j) seen.insert(ToHex(std::span(c).subspan(16 * j, 16)));
  }
  EXPECT_EQ(seen.size(), 1024u);
}

TEST(XtsTest, BlockAtMatchesSector) {
  const XtsCipher xts(CipherKind::kAes128, ReferenceKey());
  const Bytes c = xts.EncryptSector(1, ReferencePlaintext());
  const Block c1 = xts.EncryptBlockAt(EncodeSectorNumber(1), 1,
                                      Block::FromHex("88888888888888888888888888888888"));
  EXPECT_EQ(c1.ToHex(), ToHex(std::span(c).subspan(16, 16)));
  EXPECT_EQ(xts.DecryptBlockAt(EncodeSectorNumber(1), 1, c1).ToHex(),
            "88888888888888888888888888888888");
}

TEST(GeometryTest, Validation) {
  Geometry g{4096, 8, 16};
  EXPECT_EQ(g.BlocksPerSector(), 256u);
  EXPECT_EQ(g.TotalBlocks(), 2048u);
  EXPECT_NO_THROW(g.Validate());
  EXPECT_THROW((Geometry{4095, 1, 16}.BlocksPerSector()), SizeError);
  EXPECT_THROW((Geometry{0, 1, 16}.BlocksPerSector()), SizeError);
  EXPECT_THROW((Geometry{4096, 0, 16}.Validate()), SizeError);
  EXPECT_THROW((Geometry{std::uint64_t{32} << 20, 1, 16}.Validate()), SizeError);
  EXPECT_THROW((Geometry{std::uint64_t{1} << 40, std::uint64_t{1} << 40, 16}.TotalBlocks()),
               SizeError);
}

}  // namespace
}  // namespace xtskit
