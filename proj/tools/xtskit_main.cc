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

// xtskit: sector-based XTS encryption, key-scope planning, compliance
// audit and attack demonstrations.
//
// Exit codes: 0 success / clean audit, 1 audit errors or a failed demo,
// 2 usage or I/O error, 3 internal contract violation.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xtskit/attacklab.h"
#include "xtskit/audit.h"
#include "xtskit/device.h"
#include "xtskit/error.h"
#include "xtskit/keyscope.h"
#include "xtskit/reference_vector.h"
#include "xtskit/units.h"

namespace {

using xtskit::CipherKind;
using xtskit::Geometry;
using xtskit::Keyring;

enum ExitCode : int {
  kOk = 0,
  kFindings = 1,
  kUsage = 2,
  kInternal = 3,
};

std::string Pow2(std::uint64_t v) {
  if (v != 0 && (v & (v - 1)) == 0) {
    int k = 0;
    while ((std::uint64_t{1} << k) != v) ++k;
    return "2^" + std::to_string(k);
  }
  return std::to_string(v);
}

CipherKind ResolveCipher(const std::string& flag, const Keyring& ring) {
  if (ring.keys.empty()) throw xtskit::FormatError("keyring has no keys");
  const CipherKind kind =
      flag.empty() ? ring.InferCipher() : xtskit::ParseCipherKind(flag);
  for (std::size_t i = 0; i < ring.keys.size(); ++i) {
    if (ring.keys[i].data_key.size() != xtskit::KeyBytes(kind)) {
      throw xtskit::FormatError(
          "key " + std::to_string(i) + " has " +
          std::to_string(2 * ring.keys[i].data_key.size()) +
          " hex characters; " + std::string(xtskit::CipherName(kind)) +
          " needs " + std::to_string(2 * xtskit::KeyBytes(kind)));
    }
  }
  return kind;
}

std::uint64_t ResolveSectors(const std::string& sectors,
                             const std::string& device_size,
                             std::uint64_t sector_size) {
  if (!sectors.empty()) return xtskit::ParseCount(sectors);
  if (device_size.empty()) {
    throw xtskit::FormatError("give --sectors or --device-size");
  }
  const std::uint64_t bytes = xtskit::ParseSize(device_size);
  if (sector_size == 0 || bytes % sector_size != 0) {
    throw xtskit::SizeError("device size is not a whole number of sectors");
  }
  return bytes / sector_size;
}

void PrintGeometry(const Geometry& g) {
  std::cout << "geometry: " << g.sector_count << " sectors x "
            << xtskit::FormatSize(g.sector_size_bytes) << " (J = "
            << Pow2(g.BlocksPerSector()) << " blocks of " << g.block_bytes * 8
            << " bits, S*J = " << Pow2(g.TotalBlocks()) << ")\n";
}

void PrintPolicy(const xtskit::ScopePolicy& p) {
  std::cout << "policy: " << xtskit::ScopeKindName(p.kind);
  if (p.kind != xtskit::ScopeKind::kSingle) {
    std::cout << ", L = " << Pow2(p.limit_blocks) << " blocks";
  }
  if (p.kind == xtskit::ScopeKind::kRotating) {
    std::cout << ", m = " << p.key_count;
    if (p.max_sectors != 0) std::cout << ", S_max = " << p.max_sectors;
  }
  std::cout << "\n";
}

// ---------------------------------------------------------------------------
// encrypt / decrypt

struct CryptArgs {
  std::string image;
  std::string out;
  std::string keyring;
  std::string sector_size;
  std::string cipher;
  std::string profile = "all";
  unsigned jobs = 1;
  bool force = false;
  bool show_keys = false;
};

int RunCrypt(const CryptArgs& a, xtskit::Direction direction) {
  const Keyring ring = xtskit::LoadKeyring(a.keyring);
  const CipherKind kind = ResolveCipher(a.cipher, ring);
  const std::uint64_t ss = xtskit::ParseSize(a.sector_size);

  std::error_code ec;
  const std::uint64_t size = std::filesystem::file_size(a.image, ec);
  if (ec) throw xtskit::IoError("cannot stat " + a.image + ": " + ec.message());
  if (ss == 0 || size % ss != 0 || size == 0) {
    throw xtskit::SizeError("image of " + std::to_string(size) +
                            " bytes is not a whole number of " +
                            std::to_string(ss) + "-byte sectors");
  }
  const Geometry g{ss, size / ss, xtskit::BlockBytes(kind)};
  g.Validate();

  const xtskit::AuditReport report =
      xtskit::AuditConfig(g, ring, xtskit::ParseProfile(a.profile));
  PrintGeometry(g);
  PrintPolicy(ring.policy);
  std::cout << "cipher: " << xtskit::CipherName(kind) << "\n";

  const bool encrypting = direction == xtskit::Direction::kEncrypt;
  if (encrypting && report.HasErrors()) {
    for (const xtskit::Finding& f : report.findings) {
      if (f.severity != xtskit::Severity::kError) continue;
      std::cerr << (a.force ? "warning (forced): " : "error: ") << f.rule
                << ": " << f.message << " (" << f.citation << ")\n";
    }
    if (!a.force) {
      std::cerr << "pre-flight audit failed; pass --force to encrypt anyway\n";
      return kFindings;
    }
  }

  const xtskit::DeviceCrypter crypter(g, ring, kind);
  std::cout << "keys used: " << crypter.plan().keys_needed << " (indices 0.."
            << crypter.plan().keys_needed - 1 << ")\n";
  if (a.show_keys) {
    for (std::uint64_t i = 0; i < crypter.plan().keys_needed; ++i) {
      std::cout << "  key " << i << ": k=" << xtskit::ToHex(ring.keys[i].data_key)
                << " kt=" << xtskit::ToHex(ring.keys[i].tweak_key) << "\n";
    }
  }

  std::ifstream in(a.image, std::ios::binary);
  if (!in) throw xtskit::IoError("cannot open " + a.image);
  std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
  if (!out) throw xtskit::IoError("cannot create " + a.out);
  xtskit::ProcessOptions opts;
  opts.jobs = a.jobs;
  crypter.Process(in, out, direction, opts);
  out.close();
  if (!out) throw xtskit::IoError("failed writing " + a.out);

  std::cout << "risk: collision estimate per key "
            << xtskit::FormatLog2(report.risk.per_key_collision_log2)
            << " (worst " << Pow2(report.risk.blocks_per_key_worst)
            << " blocks under one key)\n";
  std::cout << (encrypting ? "encrypted " : "decrypted ") << g.sector_count
            << " sectors -> " << a.out << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// audit

struct AuditArgs {
  std::string sectors;
  std::string device_size;
  std::string sector_size;
  std::string keyring;
  std::string cipher;
  std::string profile = "all";
  std::optional<int> warn_above_log2;
  bool json = false;
};

int RunAudit(const AuditArgs& a) {
  const Keyring ring = xtskit::LoadKeyring(a.keyring);
  const CipherKind kind = ResolveCipher(a.cipher, ring);
  const std::uint64_t ss = xtskit::ParseSize(a.sector_size);
  const Geometry g{ss, ResolveSectors(a.sectors, a.device_size, ss),
                   xtskit::BlockBytes(kind)};
  xtskit::AuditOptions opts;
  opts.warn_above_log2 = a.warn_above_log2;
  const xtskit::AuditReport report =
      xtskit::AuditConfig(g, ring, xtskit::ParseProfile(a.profile), opts);
  if (a.json) {
    std::cout << xtskit::ReportToJson(report).dump(2) << "\n";
  } else {
    std::cout << xtskit::ReportToText(report);
  }
  return report.HasErrors() ? kFindings : kOk;
}

// ---------------------------------------------------------------------------
// plan

struct PlanArgs {
  std::string sectors;
  std::string device_size;
  std::string sector_size;
  std::string policy = "single";
  int limit_log2 = xtskit::kDefaultScopeLimitLog2;
  std::uint64_t key_count = 1;
  std::string max_sectors;
  std::string resize_to;
  std::string cipher = "aes128";
  bool json = false;
};

std::string ResizeSummary(const xtskit::ScopePlan& plan) {
  switch (plan.policy.kind) {
    case xtskit::ScopeKind::kSingle:
      return "any size; the single key's scope grows with the device";
    case xtskit::ScopeKind::kLinear:
      return "keys are added or removed as the device grows or shrinks; "
             "surviving sectors keep their keys";
    case xtskit::ScopeKind::kRotating:
      return "resizable up to " + std::to_string(plan.max_sectors) +
             " sectors with no remapping of existing sectors";
  }
  return "";
}

int RunPlan(const PlanArgs& a) {
  if (a.limit_log2 < 0 || a.limit_log2 > 63) {
    throw xtskit::FormatError("--limit-log2 must be in 0..63");
  }
  const CipherKind kind = xtskit::ParseCipherKind(a.cipher);
  const std::uint64_t ss = xtskit::ParseSize(a.sector_size);
  const Geometry g{ss, ResolveSectors(a.sectors, a.device_size, ss),
                   xtskit::BlockBytes(kind)};

  xtskit::ScopePolicy policy;
  policy.kind = xtskit::ParseScopeKind(a.policy);
  policy.limit_blocks = std::uint64_t{1} << a.limit_log2;
  policy.key_count = a.key_count;
  if (!a.max_sectors.empty()) policy.max_sectors = xtskit::ParseCount(a.max_sectors);

  const xtskit::ScopePlan plan = xtskit::PlanScopes(g, policy);
  const double risk = xtskit::CollisionProbabilityLog2(
      plan.worst_blocks_per_key, g.block_bytes * 8);

  std::optional<xtskit::ResizeVerdict> resize;
  if (!a.resize_to.empty()) {
    Geometry next = g;
    next.sector_count = xtskit::ParseCount(a.resize_to);
    resize = xtskit::ValidateResize(plan, g, next);
  }

  if (a.json) {
    nlohmann::json j = {
        {"policy", xtskit::ScopeKindName(policy.kind)},
        {"limit_log2", a.limit_log2},
        {"sectors", g.sector_count},
        {"sector_size", g.sector_size_bytes},
        {"blocks_per_sector", g.BlocksPerSector()},
        {"keys_needed", plan.keys_needed},
        {"sectors_per_key", plan.sectors_per_key},
        {"worst_blocks_per_key", plan.worst_blocks_per_key},
        {"within_limit", plan.within_limit},
        {"collision_prob_log2_per_key",
         std::isinf(risk) ? nlohmann::json(nullptr) : nlohmann::json(risk)},
        {"resize", ResizeSummary(plan)},
    };
    if (policy.kind == xtskit::ScopeKind::kRotating) {
      j["key_count"] = policy.key_count;
      j["max_sectors"] = plan.max_sectors;
    }
    if (resize) {
      j["resize_check"] = {{"allowed", resize->allowed},
                           {"keys_before", resize->keys_before},
                           {"keys_after", resize->keys_after},
                           {"keys_added", resize->keys_added},
                           {"keys_removed", resize->keys_removed},
                           {"kept", resize->kept},
                           {"note", resize->note}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    PrintGeometry(g);
    PrintPolicy(policy);
    std::cout << "keys needed: " << plan.keys_needed << "\n"
              << "sectors per key: " << plan.sectors_per_key << "\n"
              << "worst-case blocks per key: "
              << Pow2(plan.worst_blocks_per_key)
              << (plan.within_limit ? "" : " (exceeds L)") << "\n"
              << "collision estimate per key: " << xtskit::FormatLog2(risk)
              << "\n"
              << "resize: " << ResizeSummary(plan) << "\n";
    if (resize) {
      std::cout << "resize to " << a.resize_to << " sectors: "
                << (resize->allowed ? "allowed" : "REJECTED") << "; keys "
                << resize->keys_before << " -> " << resize->keys_after
                << " (+" << resize->keys_added << " / -"
                << resize->keys_removed << ")";
      if (!resize->kept.empty()) std::cout << "; " << resize->kept;
      std::cout << "; " << resize->note << "\n";
    }
  }
  return resize && !resize->allowed ? kUsage : kOk;
}

// ---------------------------------------------------------------------------
// demo

struct CollisionArgs {
  std::size_t width = 16;
  std::uint64_t sectors = 256;
  std::uint64_t blocks_per_sector = 16;
  std::uint64_t seed = 42;
  bool json = false;
};

int RunCollision(const CollisionArgs& a) {
  xtskit::attack::CollisionDemoParams p;
  p.width_bits = a.width;
  p.sectors = a.sectors;
  p.blocks_per_sector = a.blocks_per_sector;
  p.seed = a.seed;
  const xtskit::attack::CollisionDemoResult r = xtskit::attack::RunCollisionDemo(p);
  if (a.json) {
    std::cout << r.ToJson().dump(2) << "\n";
  } else {
    std::cout << "collision attack: toy" << a.width << ", " << a.sectors
              << " sectors x " << a.blocks_per_sector
              << " blocks, seed " << a.seed << "\n"
              << r.transcript.ToText()
              << "queries: " << r.encrypt_queries << " encrypt, "
              << r.decrypt_queries << " decrypt\n"
              << "verdict: " << (r.success() ? "success" : "failure") << "\n";
  }
  return r.success() ? kOk : kFindings;
}

struct TweakArgs {
  std::uint64_t sector = 3;
  std::uint64_t block = 2;
  std::string target;
  std::string cipher = "aes128";
  std::string device_sectors;
  std::uint64_t seed = 42;
  bool distinct_keys = false;
  bool json = false;
};

int RunTweak(const TweakArgs& a) {
  xtskit::attack::TweakDemoParams p;
  p.kind = xtskit::ParseCipherKind(a.cipher);
  if (xtskit::IsToy(p.kind)) {
    throw xtskit::FormatError("tweak-recovery runs on aes128 or aes256");
  }
  p.sector = a.sector;
  p.block = a.block;
  if (!a.target.empty()) p.target = xtskit::Block::FromHex(a.target);
  p.distinct_keys = a.distinct_keys;
  p.seed = a.seed;
  if (!a.device_sectors.empty()) {
    p.device_sectors = xtskit::ParseCount(a.device_sectors);
  }
  const xtskit::attack::TweakDemoResult r = xtskit::attack::RunTweakDemo(p);
  if (a.json) {
    std::cout << r.ToJson().dump(2) << "\n";
  } else {
    std::cout << "tweak-recovery attack: " << a.cipher << ", "
              << (a.distinct_keys ? "K != K_T" : "K = K_T") << ", sector "
              << a.sector << " block " << a.block << ", seed " << a.seed
              << "\n"
              << r.transcript.ToText()
              << "queries: " << r.decrypt_queries << " decrypt, "
              << r.encrypt_queries << " encrypt\n"
              << "verdict: " << r.verdict() << "\n";
  }
  return r.success() ? kOk : kFindings;
}

// ---------------------------------------------------------------------------
// vector

int RunVector(const std::string& cipher, int tamper) {
  if (xtskit::ParseCipherKind(cipher) != CipherKind::kAes128) {
    throw xtskit::FormatError("the reference vector is AES-XTS-128 only");
  }
  xtskit::ExpectedTable expected = xtskit::ReferenceExpected();
  if (tamper >= 0) {
    if (tamper >= static_cast<int>(expected.size())) {
      throw xtskit::FormatError("--tamper-expected index out of range");
    }
    std::string& hex = expected[tamper].hex;
    hex.back() = hex.back() == '0' ? '1' : '0';
  }
  const xtskit::ReferenceReport r = xtskit::RunReferenceVector(expected);
  std::cout << "AES-XTS-128, one sector of two blocks\n" << r.ToText();
  if (!r.AllMatch()) {
    std::cerr << "reference vector mismatch\n";
    return kInternal;
  }
  std::cout << "all values match\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sector-based XTS encryption, key-scope planning, compliance "
               "audit and attack demonstrations"};
  app.require_subcommand(1);

  CryptArgs enc_args, dec_args;
  const auto add_crypt = [&](const char* name, const char* help,
                             CryptArgs& a) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--image", a.image, "Input image")->required();
    sub->add_option("--out", a.out, "Output image")->required();
    sub->add_option("--keyring", a.keyring, "Keyring JSON")->required();
    sub->add_option("--sector-size", a.sector_size,
                    "Sector size, e.g. 4096 or 4KiB")
        ->required();
    sub->add_option("--cipher", a.cipher, "aes128|aes256|toy16 (default: from key length)");
    sub->add_option("--jobs", a.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--profile", a.profile, "Pre-flight audit profile");
    sub->add_flag("--force", a.force, "Encrypt despite audit errors");
    sub->add_flag("--show-keys", a.show_keys, "Print key material");
    return sub;
  };
  CLI::App* enc = add_crypt("encrypt", "Encrypt a raw image", enc_args);
  CLI::App* dec = add_crypt("decrypt", "Decrypt a raw image", dec_args);

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "Check a deployment against XTS limits");
  audit->add_option("--sectors", audit_args.sectors, "Sector count S (or 2^k)");
  audit->add_option("--device-size", audit_args.device_size, "Device size, e.g. 1TiB");
  audit->add_option("--sector-size", audit_args.sector_size, "Sector size")->required();
  audit->add_option("--keyring", audit_args.keyring, "Keyring JSON")->required();
  audit->add_option("--cipher", audit_args.cipher, "aes128|aes256|toy16");
  audit->add_option("--profile", audit_args.profile, "ieee-2018|ieee-2025|fips-140-3|all");
  audit->add_option("--warn-above-log2", audit_args.warn_above_log2,
                    "Warn when a key covers more than 2^k blocks");
  audit->add_flag("--json", audit_args.json, "Machine-readable output");

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand("plan", "Plan key scopes for a device");
  plan->add_option("--sectors", plan_args.sectors, "Sector count S (or 2^k)");
  plan->add_option("--device-size", plan_args.device_size, "Device size, e.g. 256TiB");
  plan->add_option("--sector-size", plan_args.sector_size, "Sector size")->required();
  plan->add_option("--policy", plan_args.policy, "single|linear|rotating");
  plan->add_option("--limit-log2", plan_args.limit_log2, "Scope limit L = 2^k blocks");
  plan->add_option("--key-count", plan_args.key_count, "Rotating key count m");
  plan->add_option("--max-sectors", plan_args.max_sectors, "Rotating: declared maximum S");
  plan->add_option("--resize-to", plan_args.resize_to, "Check a resize to this many sectors");
  plan->add_option("--cipher", plan_args.cipher, "aes128|aes256|toy16");
  plan->add_flag("--json", plan_args.json, "Machine-readable output");

  CLI::App* demo = app.add_subcommand("demo", "Attack demonstrations");
  demo->require_subcommand(1);
  CollisionArgs col_args;
  CLI::App* col = demo->add_subcommand("collision", "Birthday-collision forgery on a toy cipher");
  col->add_option("--width", col_args.width, "Block width in bits (16, 24, 32)");
  col->add_option("--sectors", col_args.sectors, "Sectors");
  col->add_option("--blocks-per-sector", col_args.blocks_per_sector, "Blocks per sector");
  col->add_option("--seed", col_args.seed, "RNG seed");
  col->add_flag("--json", col_args.json, "Machine-readable output");

  TweakArgs tw_args;
  CLI::App* tw = demo->add_subcommand("tweak-recovery", "Tweak recovery and forgery when K = K_T");
  tw->add_option("--sector", tw_args.sector, "Target sector N");
  tw->add_option("--block", tw_args.block, "Target block j");
  tw->add_option("--target", tw_args.target, "Desired plaintext (hex)");
  tw->add_option("--cipher", tw_args.cipher, "aes128|aes256");
  tw->add_option("--device-sectors", tw_args.device_sectors,
                 "Bound sector numbers to the device size");
  tw->add_option("--seed", tw_args.seed, "RNG seed for keys and target");
  tw->add_flag("--distinct-keys", tw_args.distinct_keys, "Use K != K_T (negative control)");
  tw->add_flag("--json", tw_args.json, "Machine-readable output");

  std::string vec_cipher = "aes128";
  int tamper = -1;
  CLI::App* vec = app.add_subcommand("vector", "Recompute the AES-XTS-128 known-answer vector");
  vec->add_option("--cipher", vec_cipher, "Must be aes128");
  vec->add_option("--tamper-expected", tamper, "Test hook: corrupt one expected value")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enc) return RunCrypt(enc_args, xtskit::Direction::kEncrypt);
    if (*dec) return RunCrypt(dec_args, xtskit::Direction::kDecrypt);
    if (*audit) return RunAudit(audit_args);
    if (*plan) return RunPlan(plan_args);
    if (*col) return RunCollision(col_args);
    if (*tw) return RunTweak(tw_args);
    if (*vec) return RunVector(vec_cipher, tamper);
  } catch (const xtskit::ContractError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const xtskit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
