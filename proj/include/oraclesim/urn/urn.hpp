#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "oraclesim/hex.hpp"
#include "oraclesim/rng.hpp"
#include "oraclesim/sha256.hpp"

namespace oraclesim::urn {

using Day = std::int64_t;

inline constexpr std::size_t kNonceSize = 32;
using Nonce = std::array<std::uint8_t, kNonceSize>;

// digest = SHA-256(message || nonce); hiding through the nonce, binding
// through the hash.
struct Commitment {
  Digest digest{};

  bool operator==(const Commitment&) const = default;
  std::string hex() const { return to_hex(digest); }
};

// Throws Error(BadNonceLength) unless nonce is exactly 32 bytes.
Commitment commit(std::span<const std::uint8_t> message,
                  std::span<const std::uint8_t> nonce);

inline Commitment commit(std::span<const std::uint8_t> message,
                         const Nonce& nonce) {
  return commit(message, std::span<const std::uint8_t>(nonce));
}

Nonce draw_nonce(Rng& rng);

// The two published commitments. Invariant: gold.digest != silver.digest.
struct UrnPair {
  Commitment gold;
  Commitment silver;
  Day created_at = 0;
};

// Private opening retained by the petitioner.
struct Opening {
  Bytes message;
  Nonce nonce{};
};

struct UrnOpenings {
  Opening gold;
  Opening silver;
};

// Draws two fresh nonces and publishes digests only. Equal messages are fine;
// the nonces keep the digests distinct.
std::pair<UrnPair, UrnOpenings> make_urn_pair(Bytes gold_message,
                                              Bytes silver_message, Rng& rng,
                                              Day created_at = 0);

// Keyed-hash attestation binding a witness to both commitments at a time:
// tag = SHA-256(secret || gold.digest || silver.digest || le64(timestamp)).
struct WitnessAttestation {
  std::string witness_id;
  Digest tag{};
  Day timestamp = 0;
};

WitnessAttestation attest(std::string witness_id,
                          std::span<const std::uint8_t> witness_secret,
                          const UrnPair& pair, Day timestamp);

bool verify_attestation(const WitnessAttestation& attestation,
                        std::span<const std::uint8_t> witness_secret,
                        const UrnPair& pair);

enum class UrnSide { Gold, Silver };

inline std::string_view to_string(UrnSide side) {
  return side == UrnSide::Gold ? "Gold" : "Silver";
}

// Beacon draw: Gold iff the first output byte of the stream seeded with
// beacon_seed is even. The seed doubles as the reproducibility proof; the
// beacon never reads the committed messages.
struct Selection {
  UrnSide chosen = UrnSide::Gold;
  std::uint64_t beacon_seed = 0;
  std::uint8_t draw = 0;
};

Selection select(const UrnPair& pair, std::uint64_t beacon_seed);

enum class Verdict { Accepted, Rejected };

inline std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Accepted ? "Accepted" : "Rejected";
}

struct RevealEvidence {
  Digest recomputed{};
  Digest expected{};
};

// Accepted iff commit(message, nonce) equals the chosen side's commitment
// byte for byte. Tampering yields Rejected with both digests, never an error.
struct RevealOutcome {
  Verdict verdict = Verdict::Rejected;
  std::optional<RevealEvidence> evidence;
};

RevealOutcome reveal_verify(const UrnPair& pair, const Selection& selection,
                            std::span<const std::uint8_t> message,
                            std::span<const std::uint8_t> nonce);

}  // namespace oraclesim::urn
