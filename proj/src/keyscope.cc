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

#include "xtskit/keyscope.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "xtskit/error.h"

namespace xtskit {

namespace {

using json = nlohmann::json;

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) {
  return a / b + (a % b != 0 ? 1 : 0);
}

std::string Pow2OrNumber(std::uint64_t v) {
  if (v != 0 && std::has_single_bit(v)) {
    return "2^" + std::to_string(std::countr_zero(v));
  }
  return std::to_string(v);
}

void CheckLimit(const ScopePolicy& policy) {
  if (policy.kind != ScopeKind::kSingle && policy.limit_blocks == 0) {
    throw InvalidPolicyError("scope limit L must be positive");
  }
}

std::uint64_t LinearSectorsPerKey(const ScopePolicy& policy,
                                  std::uint64_t blocks_per_sector) {
  const std::uint64_t spk = policy.limit_blocks / blocks_per_sector;
  if (spk == 0) {
    throw InvalidPolicyError(
        "linear scope of " + Pow2OrNumber(policy.limit_blocks) +
        " blocks cannot hold one sector of " +
        Pow2OrNumber(blocks_per_sector) + " blocks");
  }
  return spk;
}

}  // namespace

std::string_view ScopeKindName(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::kSingle:
      return "single";
    case ScopeKind::kLinear:
      return "linear";
    case ScopeKind::kRotating:
      return "rotating";
  }
  return "unknown";
}

ScopeKind ParseScopeKind(std::string_view name) {
  if (name == "single") return ScopeKind::kSingle;
  if (name == "linear") return ScopeKind::kLinear;
  if (name == "rotating") return ScopeKind::kRotating;
  throw FormatError("unknown scope policy \"" + std::string(name) +
                    "\" (expected single, linear or rotating)");
}

ScopePolicy ScopePolicy::Single() { return ScopePolicy{}; }

ScopePolicy ScopePolicy::Linear(std::uint64_t limit_blocks) {
  ScopePolicy p;
  p.kind = ScopeKind::kLinear;
  p.limit_blocks = limit_blocks;
  return p;
}

ScopePolicy ScopePolicy::Rotating(std::uint64_t limit_blocks,
                                  std::uint64_t key_count,
                                  std::uint64_t max_sectors) {
  ScopePolicy p;
  p.kind = ScopeKind::kRotating;
  p.limit_blocks = limit_blocks;
  p.key_count = key_count;
  p.max_sectors = max_sectors;
  return p;
}

std::uint64_t KeyIndex(const ScopePolicy& policy, std::uint64_t sector,
                       const Geometry& geometry) {
  if (sector >= geometry.sector_count) {
    throw ContractError("sector " + std::to_string(sector) +
                        " outside a device of " +
                        std::to_string(geometry.sector_count) + " sectors");
  }
  switch (policy.kind) {
    case ScopeKind::kSingle:
      return 0;
    case ScopeKind::kRotating:
      if (policy.key_count == 0) {
        throw InvalidPolicyError("rotating policy needs at least one key");
      }
      return sector % policy.key_count;
    case ScopeKind::kLinear:
      CheckLimit(policy);
      return sector /
             LinearSectorsPerKey(policy, geometry.BlocksPerSector());
  }
  throw ContractError("unknown scope kind");
}

ScopePlan PlanScopes(const Geometry& geometry, const ScopePolicy& policy) {
  // The J <= 2^20 cap belongs to encryption, not planning.
  if (geometry.sector_count == 0) throw SizeError("device has no sectors");
  geometry.TotalBlocks();
  CheckLimit(policy);
  const std::uint64_t j = geometry.BlocksPerSector();
  const std::uint64_t s = geometry.sector_count;

  ScopePlan plan;
  plan.policy = policy;
  plan.geometry = geometry;
  plan.max_sectors = std::numeric_limits<std::uint64_t>::max();

  switch (policy.kind) {
    case ScopeKind::kSingle:
      plan.keys_needed = 1;
      plan.sectors_per_key = s;
      plan.worst_blocks_per_key = geometry.TotalBlocks();
      plan.within_limit = plan.worst_blocks_per_key <= policy.limit_blocks;
      break;

    case ScopeKind::kLinear: {
      const std::uint64_t spk = LinearSectorsPerKey(policy, j);
      plan.keys_needed = CeilDiv(s, spk);
      plan.sectors_per_key = std::min(spk, s);
      plan.worst_blocks_per_key = plan.sectors_per_key * j;
      break;
    }

    case ScopeKind::kRotating: {
      const std::uint64_t m = policy.key_count;
      if (m == 0) {
        throw InvalidPolicyError("rotating policy needs at least one key");
      }
      const std::uint64_t s_max =
          policy.max_sectors != 0 ? policy.max_sectors : s;
      if (s > s_max) {
        throw PlanInfeasibleError(
            "device of " + std::to_string(s) +
            " sectors exceeds the declared maximum of " +
            std::to_string(s_max) + " sectors");
      }
      const unsigned __int128 bound =
          static_cast<unsigned __int128>(CeilDiv(s_max, m)) * j;
      if (bound > policy.limit_blocks) {
        throw PlanInfeasibleError(
            "rotating plan violates ceil(S/m)*J <= L: ceil(" +
            std::to_string(s_max) + "/" + std::to_string(m) + ")*" +
            std::to_string(j) + " = " +
            (bound >> 64 ? std::string(">= 2^64")
                         : std::to_string(static_cast<std::uint64_t>(bound))) +
            " > L = " + Pow2OrNumber(policy.limit_blocks));
      }
      plan.keys_needed = m;
      plan.sectors_per_key = CeilDiv(s, m);
      plan.worst_blocks_per_key = plan.sectors_per_key * j;
      plan.max_sectors = s_max;
      break;
    }
  }
  return plan;
}

ResizeVerdict ValidateResize(const ScopePlan& plan,
                             const Geometry& old_geometry,
                             const Geometry& new_geometry) {
  if (old_geometry.sector_size_bytes != new_geometry.sector_size_bytes ||
      old_geometry.block_bytes != new_geometry.block_bytes) {
    throw UnsupportedError(
        "resize cannot change the sector size (" +
        std::to_string(old_geometry.sector_size_bytes) + " -> " +
        std::to_string(new_geometry.sector_size_bytes) + " bytes)");
  }
  if (new_geometry.sector_count == 0) throw SizeError("device has no sectors");
  const std::uint64_t j = new_geometry.BlocksPerSector();
  const std::uint64_t s_old = old_geometry.sector_count;
  const std::uint64_t s_new = new_geometry.sector_count;
  const std::uint64_t common = std::min(s_old, s_new);

  ResizeVerdict v;
  v.keys_before = plan.keys_needed;

  switch (plan.policy.kind) {
    case ScopeKind::kSingle: {
      v.allowed = true;
      v.keys_after = 1;
      v.kept = "all sectors keep key 0";
      const unsigned __int128 blocks =
          static_cast<unsigned __int128>(s_new) * j;
      v.note = "single key now covers " +
               (blocks >> 64 ? std::string(">= 2^64")
                             : Pow2OrNumber(static_cast<std::uint64_t>(blocks))) +
               " blocks";
      if (blocks > plan.policy.limit_blocks) {
        v.note += ", above the scope limit L = " +
                  Pow2OrNumber(plan.policy.limit_blocks);
      }
      break;
    }

    case ScopeKind::kRotating: {
      v.keys_after = plan.keys_needed;
      const std::uint64_t m = plan.policy.key_count;
      const unsigned __int128 bound =
          static_cast<unsigned __int128>(CeilDiv(s_new, m)) * j;
      const std::string bound_text =
          "ceil(S/m)*J = ceil(" + std::to_string(s_new) + "/" +
          std::to_string(m) + ")*" + std::to_string(j) + " = " +
          (bound >> 64 ? std::string(">= 2^64")
                       : std::to_string(static_cast<std::uint64_t>(bound))) +
          (bound <= plan.policy.limit_blocks ? " <= " : " > ") + "L = " +
          Pow2OrNumber(plan.policy.limit_blocks);
      if (s_new <= plan.max_sectors) {
        v.allowed = true;
        v.kept = "sectors 0.." + std::to_string(common - 1) +
                 " keep key N mod " + std::to_string(m);
        v.note = "within declared maximum of " +
                 std::to_string(plan.max_sectors) + " sectors; " + bound_text;
      } else {
        v.allowed = false;
        v.note = "new size of " + std::to_string(s_new) +
                 " sectors exceeds the declared maximum of " +
                 std::to_string(plan.max_sectors) + " sectors; " + bound_text;
      }
      break;
    }

    case ScopeKind::kLinear: {
      const ScopePlan next = PlanScopes(new_geometry, plan.policy);
      v.allowed = true;
      v.keys_after = next.keys_needed;
      v.keys_added =
          next.keys_needed > plan.keys_needed ? next.keys_needed - plan.keys_needed : 0;
      v.keys_removed =
          plan.keys_needed > next.keys_needed ? plan.keys_needed - next.keys_needed : 0;
      v.kept = "sectors 0.." + std::to_string(common - 1) + " keep their keys";
      v.note = std::to_string(next.sectors_per_key) + " sectors per key";
      break;
    }
  }
  return v;
}

CipherKind Keyring::InferCipher() const {
  if (keys.empty()) throw FormatError("keyring has no keys");
  switch (keys.front().data_key.size()) {
    case 16:
      return CipherKind::kAes128;
    case 32:
      return CipherKind::kAes256;
    case 8:
      return CipherKind::kToy16;
    default:
      throw FormatError("cannot infer cipher from a " +
                        std::to_string(keys.front().data_key.size()) +
                        "-byte key");
  }
}

Keyring ParseKeyring(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("keyring is not valid JSON: ") + e.what());
  }

  Keyring ring;
  try {
    if (!doc.is_object()) throw FormatError("keyring must be a JSON object");
    if (doc.contains("policy")) {
      const json& p = doc.at("policy");
      ring.policy.kind =
          ParseScopeKind(p.value("kind", std::string("single")));
      if (p.contains("limit_blocks")) {
        ring.policy.limit_blocks = p.at("limit_blocks").get<std::uint64_t>();
      } else {
        const int log2 = p.value("limit_log2", kDefaultScopeLimitLog2);
        if (log2 < 0 || log2 > 63) {
          throw FormatError("limit_log2 must be in 0..63, got " +
                            std::to_string(log2));
        }
        ring.policy.limit_blocks = std::uint64_t{1} << log2;
      }
      ring.policy.key_count = p.value("key_count", std::uint64_t{1});
      ring.policy.max_sectors = p.value("max_sectors", std::uint64_t{0});
    }

    if (!doc.contains("keys") || !doc.at("keys").is_array()) {
      throw FormatError("keyring needs a \"keys\" array");
    }
    for (const json& entry : doc.at("keys")) {
      XtsKey key;
      key.data_key = FromHex(entry.at("k").get<std::string>());
      key.tweak_key = FromHex(entry.at("kt").get<std::string>());
      const std::size_t len = key.data_key.size();
      if (len != 8 && len != 16 && len != 32) {
        throw FormatError("key must be 16, 32 or 64 hex characters, got " +
                          std::to_string(2 * len));
      }
      if (key.tweak_key.size() != len) {
        throw FormatError("k and kt differ in length");
      }
      if (!ring.keys.empty() && ring.keys.front().data_key.size() != len) {
        throw FormatError("all keys in a keyring must have the same length");
      }
      ring.keys.push_back(std::move(key));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed keyring: ") + e.what());
  }
  return ring;
}

Keyring LoadKeyring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open keyring " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseKeyring(text.str());
}

std::string KeyringToJson(const Keyring& keyring) {
  json policy = {{"kind", ScopeKindName(keyring.policy.kind)}};
  if (std::has_single_bit(keyring.policy.limit_blocks)) {
    policy["limit_log2"] = std::countr_zero(keyring.policy.limit_blocks);
  } else {
    policy["limit_blocks"] = keyring.policy.limit_blocks;
  }
  policy["key_count"] = keyring.policy.key_count;
  policy["max_sectors"] = keyring.policy.max_sectors;

  json keys = json::array();
  for (const XtsKey& k : keyring.keys) {
    keys.push_back({{"k", ToHex(k.data_key)}, {"kt", ToHex(k.tweak_key)}});
  }
  return json{{"policy", policy}, {"keys", keys}}.dump(2);
}

}  // namespace xtskit
