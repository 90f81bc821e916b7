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

// Key scopes: which XTS key encrypts which sector, such that no key ever
// covers more than L blocks.
//
//   single    every sector uses key 0.
//   linear    consecutive runs of floor(L/J) sectors share a key, so
//             sector N uses key floor(N / floor(L/J)). Scopes are whole
//             sectors; a sector never straddles two keys.
//   rotating  sector N uses key N mod m. The maximum device size S_max is
//             fixed up front and must satisfy ceil(S_max/m) * J <= L.

#ifndef XTSKIT_KEYSCOPE_H_
#define XTSKIT_KEYSCOPE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xtskit/cipher.h"
#include "xtskit/xts.h"

namespace xtskit {

inline constexpr int kDefaultScopeLimitLog2 = 44;

enum class ScopeKind { kSingle, kLinear, kRotating };

std::string_view ScopeKindName(ScopeKind kind);
ScopeKind ParseScopeKind(std::string_view name);

struct ScopePolicy {
  ScopeKind kind = ScopeKind::kSingle;
  // L, in cipher blocks. Ignored by single.
  std::uint64_t limit_blocks = std::uint64_t{1} << kDefaultScopeLimitLog2;
  // m, rotating only.
  std::uint64_t key_count = 1;
  // Declared maximum S for rotating; 0 means "the current geometry".
  std::uint64_t max_sectors = 0;

  static ScopePolicy Single();
  static ScopePolicy Linear(std::uint64_t limit_blocks);
  static ScopePolicy Rotating(std::uint64_t limit_blocks,
                              std::uint64_t key_count,
                              std::uint64_t max_sectors = 0);

  friend bool operator==(const ScopePolicy&, const ScopePolicy&) = default;
};

struct ScopePlan {
  ScopePolicy policy;
  Geometry geometry;
  std::uint64_t keys_needed = 1;
  // Most sectors any single key encrypts for this geometry.
  std::uint64_t sectors_per_key = 1;
  std::uint64_t worst_blocks_per_key = 0;
  // Largest S the mapping supports without changing existing keys'
  // scopes: S_max for rotating, unbounded (UINT64_MAX) otherwise.
  std::uint64_t max_sectors = 0;
  // worst_blocks_per_key <= L. Always true for linear and rotating plans.
  bool within_limit = true;
};

// Key index for sector N < S.
std::uint64_t KeyIndex(const ScopePolicy& policy, std::uint64_t sector,
                       const Geometry& geometry);

// Throws InvalidPolicyError for malformed policies and PlanInfeasibleError
// when a rotating plan violates ceil(S_max/m) * J <= L or S > S_max.
ScopePlan PlanScopes(const Geometry& geometry, const ScopePolicy& policy);

struct ResizeVerdict {
  bool allowed = false;
  std::uint64_t keys_before = 0;
  std::uint64_t keys_after = 0;
  std::uint64_t keys_added = 0;
  std::uint64_t keys_removed = 0;
  // Which existing sectors keep their key, in words.
  std::string kept;
  std::string note;
};

// Throws UnsupportedError if the sector size changes.
ResizeVerdict ValidateResize(const ScopePlan& plan, const Geometry& old_geometry,
                             const Geometry& new_geometry);

struct Keyring {
  std::vector<XtsKey> keys;
  ScopePolicy policy;

  // Cipher implied by the key length: 16 bytes aes128, 32 aes256, 8 toy16.
  CipherKind InferCipher() const;
};

// JSON form:
//   {"policy": {"kind": "rotating", "limit_log2": 44, "key_count": 4,
//               "max_sectors": 1024},
//    "keys": [{"k": "<hex>", "kt": "<hex>"}, ...]}
// Hex is lowercase, byte 0 first. Throws FormatError on malformed input.
Keyring ParseKeyring(std::string_view json_text);
Keyring LoadKeyring(const std::string& path);
std::string KeyringToJson(const Keyring& keyring);

}  // namespace xtskit

#endif  // XTSKIT_KEYSCOPE_H_
