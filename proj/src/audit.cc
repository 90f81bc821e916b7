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

#include "xtskit/audit.h"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "xtskit/error.h"

namespace xtskit {

namespace {

constexpr char kCiteSectorIeee[] = "IEEE 1619-2018 5.1";
constexpr char kCiteSectorNist[] = "NIST SP 800-38E";
constexpr char kCiteScope[] = "IEEE 1619-2025 Annex D.4.2/D.4.3";
constexpr char kCiteFips[] = "FIPS 140-3 IG Annex C.I";
constexpr char kCiteIeeeKeys[] = "IEEE 1619 (XTS, j starts at 0)";

bool Covers(Profile p, Profile rule) { return p == Profile::kAll || p == rule; }

std::string Blocks(std::uint64_t v) {
  if (v != 0 && std::has_single_bit(v)) {
    return "2^" + std::to_string(std::countr_zero(v));
  }
  std::ostringstream os;
  os << v << " (~2^" << std::fixed;
  os.precision(2);
  os << std::log2(static_cast<double>(v)) << ")";
  return os.str();
}

}  // namespace

std::string_view ProfileName(Profile p) {
  switch (p) {
    case Profile::kIeee2018:
      return "ieee-2018";
    case Profile::kIeee2025:
      return "ieee-2025";
    case Profile::kFips1403:
      return "fips-140-3";
    case Profile::kAll:
      return "all";
  }
  return "unknown";
}

Profile ParseProfile(std::string_view name) {
  for (Profile p : {Profile::kIeee2018, Profile::kIeee2025,
                    Profile::kFips1403, Profile::kAll}) {
    if (ProfileName(p) == name) return p;
  }
  throw FormatError("unknown profile \"" + std::string(name) +
                    "\" (expected ieee-2018, ieee-2025, fips-140-3 or all)");
}

std::string_view SeverityName(Severity s) {
  switch (s) {
    case Severity::kInfo:
      return "info";
    case Severity::kWarning:
      return "warning";
    case Severity::kError:
      return "error";
  }
  return "unknown";
}

bool AuditReport::HasErrors() const {
  return WorstSeverity() == Severity::kError;
}

Severity AuditReport::WorstSeverity() const {
  Severity worst = Severity::kInfo;
  for (const Finding& f : findings) worst = std::max(worst, f.severity);
  return worst;
}

double CollisionProbabilityLog2(std::uint64_t blocks, std::size_t block_bits) {
  if (blocks <= 1) return -std::numeric_limits<double>::infinity();
  return 2.0 * std::log2(static_cast<double>(blocks)) -
         static_cast<double>(block_bits);
}

std::string FormatLog2(double v) {
  if (std::isinf(v) && v < 0) return "0 (no collision possible)";
  std::ostringstream os;
  if (v == std::floor(v)) {
    os << "2^" << static_cast<long long>(v);
  } else {
    os.precision(2);
    os << "2^" << std::fixed << v;
  }
  return os.str();
}

AuditReport AuditConfig(const Geometry& geometry, const Keyring& keyring,
                        Profile profile, const AuditOptions& options) {
  AuditReport report;
  report.profile = profile;
  const std::size_t n = geometry.block_bytes * 8;
  const std::uint64_t j = geometry.BlocksPerSector();

  if (j > kMaxBlocksPerSector &&
      (Covers(profile, Profile::kIeee2018) ||
       Covers(profile, Profile::kIeee2025) ||
       Covers(profile, Profile::kFips1403))) {
    std::string cite = profile == Profile::kFips1403 ? kCiteSectorNist
                       : profile == Profile::kAll
                           ? std::string(kCiteSectorIeee) + "; " + kCiteSectorNist
                           : kCiteSectorIeee;
    report.findings.push_back(
        {"sector-size", Severity::kError,
         "sector holds J = " + Blocks(j) +
             " blocks; the number of 128-bit blocks within the data unit "
             "shall not exceed 2^20",
         cite});
  }

  std::uint64_t total = 0;
  bool total_ok = true;
  try {
    total = geometry.TotalBlocks();
  } catch (const SizeError&) {
    total = std::numeric_limits<std::uint64_t>::max();
    total_ok = false;
  }

  std::optional<ScopePlan> plan;
  try {
    plan = PlanScopes(geometry, keyring.policy);
  } catch (const Error& e) {
    report.findings.push_back(
        {"scope-plan", Severity::kError, e.what(), kCiteScope});
  }

  if (plan && keyring.keys.size() < plan->keys_needed) {
    report.findings.push_back(
        {"keyring-coverage", Severity::kError,
         "keyring holds " + std::to_string(keyring.keys.size()) +
             " keys; the " + std::string(ScopeKindName(keyring.policy.kind)) +
             " policy needs " + std::to_string(plan->keys_needed),
         kCiteScope});
  }

  const std::uint64_t worst = plan ? plan->worst_blocks_per_key : total;

  if (Covers(profile, Profile::kIeee2025) && total_ok) {
    const std::uint64_t error_at = std::uint64_t{1} << kScopeErrorLog2;
    const std::uint64_t note_at = std::uint64_t{1} << kScopeNoteLog2;
    if (worst > error_at) {
      report.findings.push_back(
          {"key-scope", Severity::kError,
           "a single key covers " + Blocks(worst) +
               " blocks; the key scope is limited to 2^36 to 2^44 blocks",
           kCiteScope});
    } else if (options.warn_above_log2 && *options.warn_above_log2 < 64 &&
               worst > (std::uint64_t{1} << *options.warn_above_log2)) {
      report.findings.push_back(
          {"key-scope", Severity::kWarning,
           "a single key covers " + Blocks(worst) +
               " blocks, above the configured threshold of 2^" +
               std::to_string(*options.warn_above_log2),
           kCiteScope});
    } else if (worst > note_at) {
      report.findings.push_back(
          {"key-scope", Severity::kInfo,
           "a single key covers " + Blocks(worst) +
               " blocks: within 2^44, but stricter deployments may require "
               "2^36",
           kCiteScope});
    }
  }

  const bool fips = Covers(profile, Profile::kFips1403);
  const bool ieee = Covers(profile, Profile::kIeee2018) ||
                    Covers(profile, Profile::kIeee2025);
  if (fips || ieee) {
    for (std::size_t i = 0; i < keyring.keys.size(); ++i) {
      if (!keyring.keys[i].SharesKeys()) continue;
      const std::string msg =
          "key " + std::to_string(i) +
          " uses K = K_T; one chosen-ciphertext decryption reveals the "
          "sector tweak and allows targeted plaintext changes";
      if (fips) {
        report.findings.push_back(
            {"distinct-keys", Severity::kError, msg, kCiteFips});
      } else {
        report.findings.push_back(
            {"distinct-keys", Severity::kWarning, msg, kCiteIeeeKeys});
      }
    }
  }

  RiskReport& risk = report.risk;
  risk.block_bits = n;
  risk.total_blocks = total;
  risk.blocks_per_key_worst = worst;
  risk.keys_in_use = plan ? plan->keys_needed : 1;
  risk.device_collision_log2 = CollisionProbabilityLog2(total, n);
  risk.per_key_collision_log2 = CollisionProbabilityLog2(worst, n);

  report.findings.push_back(
      {"risk", Severity::kInfo,
       "collision estimate per key " + FormatLog2(risk.per_key_collision_log2) +
           " (" + Blocks(worst) + " blocks under one key, " +
           std::to_string(n) + "-bit blocks)",
       "q^2 / 2^n birthday estimate"});
  return report;
}

std::string ReportToText(const AuditReport& report) {
  std::ostringstream os;
  os << "profile: " << ProfileName(report.profile) << "\n";
  for (const Finding& f : report.findings) {
    os << "[" << SeverityName(f.severity) << "] " << f.rule << ": "
       << f.message << " (" << f.citation << ")\n";
  }
  const RiskReport& r = report.risk;
  os << "risk: total blocks " << Blocks(r.total_blocks)
     << ", worst blocks per key " << Blocks(r.blocks_per_key_worst)
     << ", keys " << r.keys_in_use << "\n";
  os << "risk: collision estimate per key "
     << FormatLog2(r.per_key_collision_log2) << ", whole device "
     << FormatLog2(r.device_collision_log2) << "\n";
  os << "verdict: " << (report.HasErrors() ? "NON-COMPLIANT" : "compliant")
     << "\n";
  return os.str();
}

nlohmann::json ReportToJson(const AuditReport& report) {
  nlohmann::json findings = nlohmann::json::array();
  for (const Finding& f : report.findings) {
    findings.push_back({{"rule", f.rule},
                        {"severity", SeverityName(f.severity)},
                        {"message", f.message},
                        {"citation", f.citation}});
  }
  const auto log2_or_null = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return nullptr;
    return v;
  };
  const RiskReport& r = report.risk;
  return {{"profile", ProfileName(report.profile)},
          {"compliant", !report.HasErrors()},
          {"findings", findings},
          {"risk",
           {{"block_bits", r.block_bits},
            {"total_blocks", r.total_blocks},
            {"blocks_per_key_worst", r.blocks_per_key_worst},
            {"keys_in_use", r.keys_in_use},
            {"collision_prob_log2_per_key", log2_or_null(r.per_key_collision_log2)},
            {"collision_prob_log2_device", log2_or_null(r.device_collision_log2)}}}};
}

}  // namespace xtskit
