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

// Chosen-ciphertext attacks on XTS, run against an in-memory device whose
// keys the attack code cannot see.
//
// Two independent threat models:
//
//  * Collision forgery. The adversary holds triples (P, C, T) for many
//    positions under one key. Two positions a, b with P_a ^ T_a = P_b ^ T_b
//    share a cipher input. Writing P* = target ^ T_b ^ T_a at a and reading
//    back C* yields C' = C* ^ T_a ^ T_b, which decrypts to `target` at b.
//    Collisions need ~2^(n/2) blocks, so this runs on the 16-bit toy cipher.
//
//  * Shared-key tweak recovery. With K = K_T and j = 0, decrypting an
//    all-zero block at (N, 0) returns encode(N) ^ T_{N,0}. One decryption
//    per tweak, on real AES.

#ifndef XTSKIT_ATTACKLAB_H_
#define XTSKIT_ATTACKLAB_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xtskit/block.h"
#include "xtskit/cipher.h"
#include "xtskit/xts.h"

namespace xtskit::attack {

struct Position {
  std::uint64_t sector = 0;
  std::uint64_t block = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Triple {
  Position position;
  Block plaintext;
  Block ciphertext;
  Block tweak;
};

struct TranscriptEntry {
  std::string kind;  // "encrypt", "decrypt" or "note"
  std::string sector;  // hex tweak input (sector number block)
  std::uint64_t block = 0;
  std::string input;
  std::string output;
};

class Transcript {
 public:
  void Add(TranscriptEntry entry) { entries_.push_back(std::move(entry)); }
  void Note(std::string text);
  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  nlohmann::json ToJson() const;
  std::string ToText() const;

 private:
  std::vector<TranscriptEntry> entries_;
};

enum class AddressSpace {
  // Sector numbers N < S only.
  kDevice,
  // Any n-bit value is accepted as the tweak input.
  kFullTweak,
};

class Harness;

// Query interface to a device with hidden keys. Every query is counted and
// written to the transcript.
class Oracle {
 public:
  Oracle(CipherKind kind, const XtsKey& key, const Geometry& geometry,
         AddressSpace space = AddressSpace::kDevice);

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  // Overwrites the plaintext stored at `pos` and returns its new ciphertext.
  Block Encrypt(Position pos, const Block& plaintext);
  // Decryption of a chosen ciphertext at `pos`; the device is unchanged.
  Block Decrypt(Position pos, const Block& ciphertext);
  // Decryption with a raw n-bit sector input. Throws ContractError when
  // the input is outside the address space.
  Block DecryptAt(const Block& sector_input, std::uint64_t block,
                  const Block& ciphertext);

  bool InAddressSpace(const Block& sector_input) const;

  const Geometry& geometry() const { return geometry_; }
  AddressSpace address_space() const { return space_; }
  std::size_t block_bytes() const { return xts_.block_bytes(); }
  const gf::FieldSpec& field() const { return xts_.field(); }

  std::uint64_t encrypt_queries() const { return encrypt_queries_; }
  std::uint64_t decrypt_queries() const { return decrypt_queries_; }
  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }

 private:
  friend class Harness;

  void CheckPosition(Position pos) const;

  XtsCipher xts_;
  Geometry geometry_;
  AddressSpace space_;
  std::map<Position, Block> plaintext_;
  std::uint64_t encrypt_queries_ = 0;
  std::uint64_t decrypt_queries_ = 0;
  Transcript transcript_;
};

// Ground-truth access for setting up and verifying attacks. Attack code
// takes an Oracle and never a Harness.
class Harness {
 public:
  explicit Harness(Oracle& oracle) : oracle_(oracle) {}

  void Store(Position pos, const Block& plaintext);
  Block StoredPlaintext(Position pos) const;
  Block StoredCiphertext(Position pos) const;
  Block TrueTweak(Position pos) const;
  Block TrueTweakAt(const Block& sector_input, std::uint64_t block) const;
  // The adversary's view of every stored position, in position order.
  std::vector<Triple> Triples() const;
  // Does `ciphertext` placed at `pos` decrypt to `expected`?
  bool DecryptsTo(Position pos, const Block& ciphertext,
                  const Block& expected) const;

 private:
  Oracle& oracle_;
};

using Collision = std::pair<Position, Position>;

// First pair (earlier, later) in triple order with equal P ^ T.
std::optional<Collision> FindCollision(std::span<const Triple> triples);
// Number of unordered pairs with equal P ^ T.
std::uint64_t CountCollidingPairs(std::span<const Triple> triples);

struct ForgedBlock {
  Position position;
  Block ciphertext;
};

// Throws ContractError if `collision` does not satisfy P_a ^ T_a = P_b ^ T_b
// or names a position missing from `triples`.
ForgedBlock ForgeViaCollision(Oracle& oracle, const Collision& collision,
                              std::span<const Triple> triples,
                              const Block& target);

// One all-zero decryption at (sector, 0). Returns T_{sector,0} when the
// device has K = K_T, and garbage otherwise.
Block RecoverTweakSharedKey(Oracle& oracle, std::uint64_t sector);

struct TweakForgery {
  enum class Status { kForged, kOutOfAddressSpace };
  Status status = Status::kForged;
  Block recovered_tweak;  // T_{N,0}
  Block block_tweak;      // T_{N,j}
  Block auxiliary_sector;  // target ^ T_{N,j}
  std::optional<ForgedBlock> forged;
};

// Two decryption queries: tweak recovery and E_K(target ^ T_{N,j}) read
// off the tweak of sector target ^ T_{N,j}.
TweakForgery ForgeViaRecoveredTweak(Oracle& oracle, std::uint64_t sector,
                                    std::uint64_t block, const Block& target);

// ---------------------------------------------------------------------------
// End-to-end demonstrations with harness verification.

struct CollisionDemoParams {
  std::size_t width_bits = 16;
  std::uint64_t sectors = 256;
  std::uint64_t blocks_per_sector = 16;
  std::uint64_t seed = 42;
};

struct CollisionDemoResult {
  CollisionDemoParams params;
  std::uint64_t positions = 0;
  std::uint64_t colliding_pairs = 0;
  double expected_pairs = 0;  // q(q-1) / 2^(n+1)
  std::optional<Collision> collision;
  std::optional<Block> target;
  std::optional<ForgedBlock> forged;
  bool forgery_verified = false;
  std::uint64_t encrypt_queries = 0;
  std::uint64_t decrypt_queries = 0;
  Transcript transcript;

  bool success() const { return collision.has_value() && forgery_verified; }
  nlohmann::json ToJson() const;
};

CollisionDemoResult RunCollisionDemo(const CollisionDemoParams& params);

struct TweakDemoParams {
  CipherKind kind = CipherKind::kAes128;
  std::uint64_t sector = 3;
  std::uint64_t block = 2;
  std::optional<Block> target;  // random from the seed when unset
  bool distinct_keys = false;
  std::uint64_t seed = 42;
  // Bounds the oracle to N < device_sectors; full tweak space when unset.
  std::optional<std::uint64_t> device_sectors;
  std::uint64_t sector_size_bytes = 4096;
};

struct TweakDemoResult {
  TweakDemoParams params;
  Block target;
  Block recovered_tweak;
  Block true_tweak;
  bool tweak_recovered = false;
  TweakForgery forgery;
  bool forgery_verified = false;
  std::uint64_t decrypt_queries = 0;
  std::uint64_t encrypt_queries = 0;
  Transcript transcript;

  bool success() const { return tweak_recovered && forgery_verified; }
  std::string verdict() const;
  nlohmann::json ToJson() const;
};

TweakDemoResult RunTweakDemo(const TweakDemoParams& params);

}  // namespace xtskit::attack

#endif  // XTSKIT_ATTACKLAB_H_
