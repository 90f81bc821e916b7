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

#include "xtskit/toy_cipher.h"

#include "xtskit/error.h"

namespace xtskit {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint32_t LoadLe(std::span<const std::uint8_t> b) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < b.size(); ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

void StoreLe(std::span<std::uint8_t> b, std::uint32_t v) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  }
}

}  // namespace

ToyFeistel::ToyFeistel(std::uint64_t seed, std::size_t width_bits)
    : seed_(seed), width_bits_(width_bits), half_bits_(width_bits / 2) {
  if (width_bits != 16 && width_bits != 24 && width_bits != 32) {
    throw UnsupportedError("toy cipher width must be 16, 24 or 32, got " +
                           std::to_string(width_bits));
  }
  half_mask_ = static_cast<std::uint32_t>((std::uint64_t{1} << half_bits_) - 1);
  for (int r = 0; r < kRounds; ++r) {
    round_keys_[r] = Mix64(seed + static_cast<std::uint64_t>(r) * kGolden);
  }
}

std::string ToyFeistel::name() const {
  return "toy" + std::to_string(width_bits_);
}

std::uint32_t ToyFeistel::Round(std::uint32_t half, int r) const {
  const std::uint64_t k = round_keys_[r] & half_mask_;
  return static_cast<std::uint32_t>(Mix64(half ^ k) >> (64 - half_bits_));
}

std::uint32_t ToyFeistel::Encrypt(std::uint32_t v) const {
  std::uint32_t left = (v >> half_bits_) & half_mask_;
  std::uint32_t right = v & half_mask_;
  for (int r = 0; r < kRounds; ++r) {
    const std::uint32_t next = left ^ Round(right, r);
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint32_t ToyFeistel::Decrypt(std::uint32_t v) const {
  std::uint32_t left = (v >> half_bits_) & half_mask_;
  std::uint32_t right = v & half_mask_;
  for (int r = kRounds - 1; r >= 0; --r) {
    const std::uint32_t prev = right ^ Round(left, r);
    right = left;
    left = prev;
  }
  return (left << half_bits_) | right;
}

void ToyFeistel::EncryptInPlace(std::span<std::uint8_t> block) const {
  if (block.size() != block_bytes()) {
    throw ContractError("toy cipher block width mismatch");
  }
  StoreLe(block, Encrypt(LoadLe(block)));
}

void ToyFeistel::DecryptInPlace(std::span<std::uint8_t> block) const {
  if (block.size() != block_bytes()) {
    throw ContractError("toy cipher block width mismatch");
  }
  StoreLe(block, Decrypt(LoadLe(block)));
}

}  // namespace xtskit
