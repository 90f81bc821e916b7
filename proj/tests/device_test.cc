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

#include "xtskit/device.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <vector>

#include "oracles.h"
#include "xtskit/error.h"

namespace xtskit {
namespace {

using Bytes = std::vector<std::uint8_t>;

Keyring RandomRing(std::mt19937_64& rng, std::size_t n, std::size_t key_bytes,
                   ScopePolicy policy) {
  Keyring ring;
  ring.policy = policy;
  for (std::size_t i = 0; i < n; ++i) {
    ring.keys.push_back({oracle::RandomBytes(rng, key_bytes),
                         oracle::RandomBytes(rng, key_bytes)});
  }
  return ring;
}

TEST(DeviceTest, TwoSectorsAreConcatenatedSectorEncryptions) {
  std::mt19937_64 rng(31);
  const Keyring ring = RandomRing(rng, 1, 16, ScopePolicy::Single());
  const Geometry g{512, 2, 16};
  const Bytes img = oracle::RandomBytes(rng, 1024);
  const Bytes out = ProcessDevice(img, g, ring, CipherKind::kAes128, Direction::kEncrypt);
  const XtsCipher xts(CipherKind::kAes128, ring.keys[0]);
  Bytes want = xts.EncryptSector(0, std::span(img).first(512));
  const Bytes s1 = xts.EncryptSector(1, std::span(img).subspan(512));
  want.insert(want.end(), s1.begin(), s1.end());
  EXPECT_EQ(out, want);
}

TEST(DeviceTest, ReferenceVectorAtSectorOne) {
  Keyring ring;
  ring.keys.push_back({Bytes(16, 0x11), Bytes(16, 0x22)});
  Bytes img(32, 0);
  img.insert(img.end(), 16, 0x44);
  img.insert(img.end(), 16, 0x88);
  const Bytes out =
      ProcessDevice(img, Geometry{32, 2, 16}, ring, CipherKind::kAes128, Direction::kEncrypt);
  EXPECT_EQ(ToHex(std::span(out).subspan(32)),
            "74a24eb9b1b6ac5e3f95ca359b8d1585"
            "65093d6dfc46548f0a9b57d5d76dc64e");
}

TEST(DeviceTest, RotatingKeysSelectedPerSector) {
  std::mt19937_64 rng(32);
  const Keyring ring = RandomRing(rng, 3, 16, ScopePolicy::Rotating(1 << 20, 3));
  const Geometry g{64, 10, 16};
  const Bytes img = oracle::RandomBytes(rng, 640);
  const Bytes out = ProcessDevice(img, g, ring, CipherKind::kAes128, Direction::kEncrypt);
  for (std::uint64_t n = 0; n < 10; ++n) {
    const XtsCipher xts(CipherKind::kAes128, ring.keys[n % 3]);
    ASSERT_EQ(xts.EncryptSector(n, std::span(img).subspan(64 * n, 64)),
              Bytes(out.begin() + 64 * n, out.begin() + 64 * (n + 1)));
  }
}

TEST(DeviceTest, ParallelMatchesSequential) {
  std::mt19937_64 rng(33);
  const Keyring ring = RandomRing(rng, 4, 32, ScopePolicy::Linear(16 * 256));
  const Geometry g{4096, 64, 16};
  const Bytes img = oracle::RandomBytes(rng, 4096 * 64);
  ProcessOptions seq, par;
  par.jobs = 8;
  const Bytes a = ProcessDevice(img, g, ring, CipherKind::kAes256, Direction::kEncrypt, seq);
  const Bytes b = ProcessDevice(img, g, ring, CipherKind::kAes256, Direction::kEncrypt, par);
  EXPECT_EQ(a, b);
  EXPECT_EQ(ProcessDevice(a, g, ring, CipherKind::kAes256, Direction::kDecrypt, par), img);
}

TEST(DeviceTest, StreamingMatchesInMemory) {
  std::mt19937_64 rng(34);
  const Keyring ring = RandomRing(rng, 1, 16, ScopePolicy::Single());
  const Geometry g{512, 37, 16};
  const Bytes img = oracle::RandomBytes(rng, 512 * 37);
  const DeviceCrypter dev(g, ring, CipherKind::kAes128);
  std::istringstream in(std::string(img.begin(), img.end()));
  std::ostringstream out;
  ProcessOptions opts;
  opts.chunk_bytes = 5 * 512 + 100;
  opts.jobs = 3;
  dev.Process(in, out, Direction::kEncrypt, opts);
  const std::string s = out.str();
  EXPECT_EQ(Bytes(s.begin(), s.end()), dev.Process(img, Direction::kEncrypt));
}

TEST(DeviceTest, SizeMismatch) {
  std::mt19937_64 rng(35);
  const Keyring ring = RandomRing(rng, 1, 16, ScopePolicy::Single());
  const DeviceCrypter dev(Geometry{512, 4, 16}, ring, CipherKind::kAes128);
  EXPECT_THROW(dev.Process(Bytes(512 * 3), Direction::kEncrypt), SizeError);
  std::istringstream shorter(std::string(512 * 3, 'x'));
  std::ostringstream out;
  EXPECT_THROW(dev.Process(shorter, out, Direction::kEncrypt), Error);
  std::istringstream longer(std::string(512 * 5, 'x'));
  EXPECT_THROW(dev.Process(longer, out, Direction::kEncrypt), Error);
}

TEST(DeviceTest, KeyringTooSmall) {
  std::mt19937_64 rng(36);
  const Keyring ring = RandomRing(rng, 1, 16, ScopePolicy::Linear(32 * 2));
  EXPECT_THROW(DeviceCrypter(Geometry{512, 4, 16}, ring, CipherKind::kAes128),
               PlanInfeasibleError);
}

TEST(DeviceTest, WrongKeyLength) {
  std::mt19937_64 rng(37);
  const Keyring ring = RandomRing(rng, 1, 16, ScopePolicy::Single());
  EXPECT_THROW(DeviceCrypter(Geometry{512, 4, 16}, ring, CipherKind::kAes256), Error);
}

}  // namespace
}  // namespace xtskit
