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

// Compliance and risk checks for an XTS deployment.
//
// Rules, by profile:
//   sector-size     J <= 2^20 blocks per sector       ieee-2018, ieee-2025,
//                                                     fips-140-3 (error)
//   scope-plan      the key-scope policy is feasible  all (error)
//   keyring-coverage enough keys for the policy       all (error)
//   key-scope       blocks per key <= 2^44 (error);   ieee-2025
//                   > 2^36 is an info note, or a warning above an
//                   optional stricter threshold
//   distinct-keys   K != K_T                          fips-140-3 (error),
//                                                     ieee-* (warning)
//   risk            collision estimate, always        (info)
//
// The collision estimate is q^2 / 2^n for q blocks under one key, with no
// extra constant factor, reported as log2.

#ifndef XTSKIT_AUDIT_H_
#define XTSKIT_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "xtskit/keyscope.h"
#include "xtskit/xts.h"

namespace xtskit {

enum class Profile { kIeee2018, kIeee2025, kFips1403, kAll };
enum class Severity { kInfo, kWarning, kError };

std::string_view ProfileName(Profile p);
Profile ParseProfile(std::string_view name);
std::string_view SeverityName(Severity s);

inline constexpr int kScopeErrorLog2 = 44;
inline constexpr int kScopeNoteLog2 = 36;

struct Finding {
  std::string rule;
  Severity severity = Severity::kInfo;
  std::string message;
  std::string citation;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct RiskReport {
  std::size_t block_bits = 128;
  std::uint64_t total_blocks = 0;
  std::uint64_t blocks_per_key_worst = 0;
  std::uint64_t keys_in_use = 1;
  // log2 of the collision estimate; -infinity when no collision is
  // possible (at most one block).
  double device_collision_log2 = 0;
  double per_key_collision_log2 = 0;
};

struct AuditOptions {
  // Blocks per key above 2^warn_above_log2 raise a key-scope warning.
  std::optional<int> warn_above_log2;
};

struct AuditReport {
  Profile profile = Profile::kAll;
  std::vector<Finding> findings;
  RiskReport risk;

  bool HasErrors() const;
  Severity WorstSeverity() const;
};

// 2*log2(blocks) - n, or -infinity for blocks <= 1.
double CollisionProbabilityLog2(std::uint64_t blocks, std::size_t block_bits);

AuditReport AuditConfig(const Geometry& geometry, const Keyring& keyring,
                        Profile profile, const AuditOptions& options = {});

std::string FormatLog2(double log2_value);
std::string ReportToText(const AuditReport& report);
nlohmann::json ReportToJson(const AuditReport& report);

}  // namespace xtskit

#endif  // XTSKIT_AUDIT_H_
