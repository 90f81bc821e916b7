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

#include "xtskit/attacklab.h"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

#include "xtskit/error.h"

namespace xtskit::attack {

namespace {

Block RandomBlock(std::mt19937_64& rng, std::size_t bytes) {
  Block b(bytes);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bytes; ++i) {
    if (i % 8 == 0) word = rng();
    b[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
  }
  return b;
}

std::vector<std::uint8_t> RandomKey(std::mt19937_64& rng, std::size_t bytes) {
  const Block b = RandomBlock(rng, std::min<std::size_t>(bytes, 16));
  std::vector<std::uint8_t> key(b.bytes().begin(), b.bytes().end());
  if (bytes > 16) {
    const Block rest = RandomBlock(rng, bytes - 16);
    key.insert(key.end(), rest.bytes().begin(), rest.bytes().end());
  }
  return key;
}

nlohmann::json PositionJson(Position p) {
  return {{"sector", p.sector}, {"block", p.block}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Transcript

void Transcript::Note(std::string text) {
  TranscriptEntry e;
  e.kind = "note";
  e.output = std::move(text);
  entries_.push_back(std::move(e));
}

nlohmann::json Transcript::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const TranscriptEntry& e : entries_) {
    if (e.kind == "note") {
      out.push_back({{"kind", e.kind}, {"text", e.output}});
    } else {
      out.push_back({{"kind", e.kind},
                     {"sector", e.sector},
                     {"block", e.block},
                     {"input", e.input},
                     {"output", e.output}});
    }
  }
  return out;
}

std::string Transcript::ToText() const {
  std::ostringstream os;
  for (const TranscriptEntry& e : entries_) {
    if (e.kind == "note") {
      os << "  # " << e.output << "\n";
    } else {
      os << "  " << e.kind << " sector=" << e.sector << " block=" << e.block
         << " in=" << e.input << " out=" << e.output << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Oracle / Harness

Oracle::Oracle(CipherKind kind, const XtsKey& key, const Geometry& geometry,
               AddressSpace space)
    : xts_(kind, key), geometry_(geometry), space_(space) {
  geometry_.block_bytes = BlockBytes(kind);
  geometry_.BlocksPerSector();
}

void Oracle::CheckPosition(Position pos) const {
  if (space_ == AddressSpace::kDevice && pos.sector >= geometry_.sector_count) {
    throw ContractError("sector " + std::to_string(pos.sector) +
                        " outside the device");
  }
  if (pos.block >= geometry_.BlocksPerSector()) {
    throw ContractError("block " + std::to_string(pos.block) +
                        " outside the sector");
  }
}

Block Oracle::Encrypt(Position pos, const Block& plaintext) {
  CheckPosition(pos);
  const Block sector = EncodeSectorNumber(pos.sector, block_bytes());
  const Block c = xts_.EncryptBlockAt(sector, pos.block, plaintext);
  plaintext_[pos] = plaintext;
  ++encrypt_queries_;
  transcript_.Add({"encrypt", sector.ToHex(), pos.block, plaintext.ToHex(),
                   c.ToHex()});
  return c;
}

Block Oracle::Decrypt(Position pos, const Block& ciphertext) {
  CheckPosition(pos);
  return DecryptAt(EncodeSectorNumber(pos.sector, block_bytes()), pos.block,
                   ciphertext);
}

Block Oracle::DecryptAt(const Block& sector_input, std::uint64_t block,
                        const Block& ciphertext) {
  if (!InAddressSpace(sector_input)) {
    throw ContractError("sector input " + sector_input.ToHex() +
                        " outside the address space");
  }
  if (block >= geometry_.BlocksPerSector()) {
    throw ContractError("block " + std::to_string(block) +
                        " outside the sector");
  }
  const Block p = xts_.DecryptBlockAt(sector_input, block, ciphertext);
  ++decrypt_queries_;
  transcript_.Add(
      {"decrypt", sector_input.ToHex(), block, ciphertext.ToHex(), p.ToHex()});
  return p;
}

bool Oracle::InAddressSpace(const Block& sector_input) const {
  if (sector_input.size() != block_bytes()) return false;
  if (space_ == AddressSpace::kFullTweak) return true;
  const std::optional<std::uint64_t> n = DecodeSectorNumber(sector_input);
  return n && *n < geometry_.sector_count;
}

void Harness::Store(Position pos, const Block& plaintext) {
  oracle_.CheckPosition(pos);
  oracle_.plaintext_[pos] = plaintext;
}

Block Harness::StoredPlaintext(Position pos) const {
  const auto it = oracle_.plaintext_.find(pos);
  if (it == oracle_.plaintext_.end()) {
    return Block(oracle_.block_bytes());
  }
  return it->second;
}

Block Harness::StoredCiphertext(Position pos) const {
  return oracle_.xts_.EncryptBlockAt(
      EncodeSectorNumber(pos.sector, oracle_.block_bytes()), pos.block,
      StoredPlaintext(pos));
}

Block Harness::TrueTweak(Position pos) const {
  return TrueTweakAt(EncodeSectorNumber(pos.sector, oracle_.block_bytes()),
                     pos.block);
}

Block Harness::TrueTweakAt(const Block& sector_input,
                           std::uint64_t block) const {
  return oracle_.xts_.TweakAt(sector_input, block);
}

std::vector<Triple> Harness::Triples() const {
  std::vector<Triple> out;
  out.reserve(oracle_.plaintext_.size());
  // Tweaks of one sector share E_{K_T}(N); walk the chain instead of
  // re-encrypting per block.
  std::uint64_t chain_sector = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t chain_block = 0;
  Block chain;
  for (const auto& [pos, p] : oracle_.plaintext_) {
    if (pos.sector != chain_sector || pos.block < chain_block) {
      chain_sector = pos.sector;
      chain_block = 0;
      chain = TrueTweak({pos.sector, 0});
    }
    for (; chain_block < pos.block; ++chain_block) {
      gf::MulAlphaInPlace(chain.bytes(), oracle_.field());
    }
    const Block c =
        EncryptBlock(oracle_.xts_.data_cipher(), p ^ chain) ^ chain;
    out.push_back({pos, p, c, chain});
  }
  return out;
}

bool Harness::DecryptsTo(Position pos, const Block& ciphertext,
                         const Block& expected) const {
  const Block p = oracle_.xts_.DecryptBlockAt(
      EncodeSectorNumber(pos.sector, oracle_.block_bytes()), pos.block,
      ciphertext);
  return p == expected;
}

// ---------------------------------------------------------------------------
// Attacks

std::optional<Collision> FindCollision(std::span<const Triple> triples) {
  std::unordered_map<Block, Position> seen;
  seen.reserve(triples.size());
  for (const Triple& t : triples) {
    const Block input = t.plaintext ^ t.tweak;
    const auto [it, inserted] = seen.emplace(input, t.position);
    if (!inserted && it->second != t.position) {
      return Collision{it->second, t.position};
    }
  }
  return std::nullopt;
}

std::uint64_t CountCollidingPairs(std::span<const Triple> triples) {
  std::unordered_map<Block, std::uint64_t> counts;
  counts.reserve(triples.size());
  for (const Triple& t : triples) ++counts[t.plaintext ^ t.tweak];
  std::uint64_t pairs = 0;
  for (const auto& [input, c] : counts) pairs += c * (c - 1) / 2;
  return pairs;
}

ForgedBlock ForgeViaCollision(Oracle& oracle, const Collision& collision,
                              std::span<const Triple> triples,
                              const Block& target) {
  const auto [a, b] = collision;
  const Triple* ta = nullptr;
  const Triple* tb = nullptr;
  for (const Triple& t : triples) {
    if (t.position == a) ta = &t;
    if (t.position == b) tb = &t;
  }
  if (ta == nullptr || tb == nullptr) {
    throw ContractError("collision names a position without a triple");
  }
  if (a == b || (ta->plaintext ^ ta->tweak) != (tb->plaintext ^ tb->tweak)) {
    throw ContractError("positions do not satisfy P_a ^ T_a = P_b ^ T_b");
  }

  const Block overwrite = target ^ tb->tweak ^ ta->tweak;
  const Block fresh = oracle.Encrypt(a, overwrite);
  return ForgedBlock{b, fresh ^ ta->tweak ^ tb->tweak};
}

Block RecoverTweakSharedKey(Oracle& oracle, std::uint64_t sector) {
  const Block zero(oracle.block_bytes());
  const Block p = oracle.Decrypt({sector, 0}, zero);
  return p ^ EncodeSectorNumber(sector, oracle.block_bytes());
}

TweakForgery ForgeViaRecoveredTweak(Oracle& oracle, std::uint64_t sector,
                                    std::uint64_t block, const Block& target) {
  TweakForgery out;
  out.recovered_tweak = RecoverTweakSharedKey(oracle, sector);
  out.block_tweak = gf::AlphaPow(out.recovered_tweak, block, oracle.field());
  out.auxiliary_sector = target ^ out.block_tweak;

  if (!oracle.InAddressSpace(out.auxiliary_sector)) {
    out.status = TweakForgery::Status::kOutOfAddressSpace;
    oracle.transcript().Note("auxiliary sector " +
                             out.auxiliary_sector.ToHex() +
                             " is outside the address space");
    return out;
  }

  // With K = K_T the tweak of sector X is E_K(X), so decrypting zero at
  // (X, 0) hands back X ^ E_K(X).
  const Block zero(oracle.block_bytes());
  const Block p = oracle.DecryptAt(out.auxiliary_sector, 0, zero);
  const Block cipher_out = p ^ out.auxiliary_sector;
  out.forged = ForgedBlock{{sector, block}, cipher_out ^ out.block_tweak};
  return out;
}

// ---------------------------------------------------------------------------
// Demonstrations

nlohmann::json CollisionDemoResult::ToJson() const {
  nlohmann::json j = {
      {"attack", "collision"},
      {"width", params.width_bits},
      {"sectors", params.sectors},
      {"blocks_per_sector", params.blocks_per_sector},
      {"seed", params.seed},
      {"positions", positions},
      {"colliding_pairs", colliding_pairs},
      {"expected_pairs", expected_pairs},
      {"collision_found", collision.has_value()},
      {"forgery_verified", forgery_verified},
      {"encrypt_queries", encrypt_queries},
      {"decrypt_queries", decrypt_queries},
      {"verdict", success() ? "success" : "failure"},
      {"transcript", transcript.ToJson()},
  };
  if (collision) {
    j["collision"] = {PositionJson(collision->first),
                      PositionJson(collision->second)};
  }
  if (target) j["target"] = target->ToHex();
  if (forged) {
    j["forged"] = {{"position", PositionJson(forged->position)},
                   {"ciphertext", forged->ciphertext.ToHex()}};
  }
  return j;
}

CollisionDemoResult RunCollisionDemo(const CollisionDemoParams& params) {
  const CipherKind kind = params.width_bits == 16   ? CipherKind::kToy16
                          : params.width_bits == 24 ? CipherKind::kToy24
                          : params.width_bits == 32 ? CipherKind::kToy32
                                                    : throw UnsupportedError(
                                                          "collision demo "
                                                          "width must be 16, "
                                                          "24 or 32");
  const std::size_t bs = BlockBytes(kind);
  if (params.sectors == 0 || params.blocks_per_sector == 0) {
    throw SizeError("collision demo needs at least one sector and block");
  }

  std::mt19937_64 rng(params.seed);
  XtsKey key{RandomKey(rng, 8), RandomKey(rng, 8)};
  Geometry geometry{params.blocks_per_sector * bs, params.sectors, bs};
  Oracle oracle(kind, key, geometry, AddressSpace::kDevice);
  Harness harness(oracle);

  for (std::uint64_t n = 0; n < params.sectors; ++n) {
    for (std::uint64_t j = 0; j < params.blocks_per_sector; ++j) {
      harness.Store({n, j}, RandomBlock(rng, bs));
    }
  }

  CollisionDemoResult r;
  r.params = params;
  r.positions = params.sectors * params.blocks_per_sector;
  const double q = static_cast<double>(r.positions);
  r.expected_pairs = q * (q - 1) / std::ldexp(1.0, static_cast<int>(params.width_bits) + 1);

  const std::vector<Triple> triples = harness.Triples();
  r.colliding_pairs = CountCollidingPairs(triples);
  r.collision = FindCollision(triples);
  r.target = RandomBlock(rng, bs);

  Transcript& t = oracle.transcript();
  t.Note(std::to_string(triples.size()) + " triples, " +
         std::to_string(r.colliding_pairs) + " colliding pairs (expected " +
         std::to_string(r.expected_pairs) + ")");
  if (r.collision) {
    const auto [a, b] = *r.collision;
    t.Note("collision at (" + std::to_string(a.sector) + "," +
           std::to_string(a.block) + ") and (" + std::to_string(b.sector) +
           "," + std::to_string(b.block) + "); target " + r.target->ToHex());
    r.forged = ForgeViaCollision(oracle, *r.collision, triples, *r.target);
    r.forgery_verified = harness.DecryptsTo(r.forged->position,
                                            r.forged->ciphertext, *r.target);
    t.Note("forged ciphertext " + r.forged->ciphertext.ToHex() +
           (r.forgery_verified ? " decrypts to the target"
                               : " does NOT decrypt to the target"));
  } else {
    t.Note("no collision among the triples");
  }
  r.encrypt_queries = oracle.encrypt_queries();
  r.decrypt_queries = oracle.decrypt_queries();
  r.transcript = oracle.transcript();
  return r;
}

std::string TweakDemoResult::verdict() const {
  if (!tweak_recovered) return "failure: recovered tweak is wrong";
  if (forgery.status == TweakForgery::Status::kOutOfAddressSpace) {
    return "tweak recovered; forgery impossible: auxiliary sector outside "
           "the address space";
  }
  return forgery_verified ? "success" : "failure: forged block rejected";
}

nlohmann::json TweakDemoResult::ToJson() const {
  nlohmann::json j = {
      {"attack", "tweak-recovery"},
      {"cipher", CipherName(params.kind)},
      {"sector", params.sector},
      {"block", params.block},
      {"distinct_keys", params.distinct_keys},
      {"seed", params.seed},
      {"address_space", params.device_sectors ? "device" : "full-tweak"},
      {"target", target.ToHex()},
      {"recovered_tweak", recovered_tweak.ToHex()},
      {"true_tweak", true_tweak.ToHex()},
      {"tweak_recovered", tweak_recovered},
      {"forgery_status",
       forgery.status == TweakForgery::Status::kForged ? "forged"
                                                       : "out-of-address-space"},
      {"forgery_verified", forgery_verified},
      {"decrypt_queries", decrypt_queries},
      {"encrypt_queries", encrypt_queries},
      {"verdict", verdict()},
      {"success", success()},
      {"transcript", transcript.ToJson()},
  };
  if (params.device_sectors) j["device_sectors"] = *params.device_sectors;
  if (forgery.forged) j["forged_ciphertext"] = forgery.forged->ciphertext.ToHex();
  return j;
}

TweakDemoResult RunTweakDemo(const TweakDemoParams& params) {
  const std::size_t bs = BlockBytes(params.kind);
  std::mt19937_64 rng(params.seed);
  XtsKey key;
  key.data_key = RandomKey(rng, KeyBytes(params.kind));
  key.tweak_key = key.data_key;
  if (params.distinct_keys) {
    do {
      key.tweak_key = RandomKey(rng, KeyBytes(params.kind));
    } while (key.tweak_key == key.data_key);
  }

  Geometry geometry{params.sector_size_bytes,
                    params.device_sectors.value_or(
                        std::numeric_limits<std::uint64_t>::max()),
                    bs};
  Oracle oracle(params.kind, key, geometry,
                params.device_sectors ? AddressSpace::kDevice
                                      : AddressSpace::kFullTweak);
  Harness harness(oracle);

  TweakDemoResult r;
  r.params = params;
  r.target = params.target ? *params.target : RandomBlock(rng, bs);
  if (r.target.size() != bs) {
    throw FormatError("target must be " + std::to_string(2 * bs) +
                      " hex characters");
  }

  r.forgery = ForgeViaRecoveredTweak(oracle, params.sector, params.block,
                                     r.target);
  r.recovered_tweak = r.forgery.recovered_tweak;
  r.true_tweak = harness.TrueTweak({params.sector, 0});
  r.tweak_recovered = r.recovered_tweak == r.true_tweak;
  if (r.forgery.forged) {
    r.forgery_verified = harness.DecryptsTo(
        r.forgery.forged->position, r.forgery.forged->ciphertext, r.target);
  }
  oracle.transcript().Note(
      std::string("recovered tweak ") + r.recovered_tweak.ToHex() +
      (r.tweak_recovered ? " matches" : " does NOT match") +
      " the device tweak");
  oracle.transcript().Note("verdict: " + r.verdict());
  r.decrypt_queries = oracle.decrypt_queries();
  r.encrypt_queries = oracle.encrypt_queries();
  r.transcript = oracle.transcript();
  return r;
}

}  // namespace xtskit::attack
