#include "oraclesim/urn/urn.hpp"

#include "oraclesim/error.hpp"

namespace oraclesim::urn {

namespace {

void append_le64(Sha256& hasher, std::uint64_t value) {
  std::uint8_t bytes[8];
  for (int i = 0; i < 8; ++i) {
    bytes[i] = static_cast<std::uint8_t>(value >> (i * 8));
  }
  hasher.update(bytes, sizeof(bytes));
}

}  // namespace

Commitment commit(std::span<const std::uint8_t> message,
                  std::span<const std::uint8_t> nonce) {
  if (nonce.size() != kNonceSize) {
    throw Error(ErrorCode::BadNonceLength,
                "nonce must be exactly 32 bytes, got " +
                    std::to_string(nonce.size()));
  }
  Sha256 hasher;
  hasher.update(message);
  hasher.update(nonce);
  return Commitment{hasher.finish()};
}

Nonce draw_nonce(Rng& rng) {
  Nonce nonce;
  rng.fill_bytes(nonce);
  return nonce;
}

std::pair<UrnPair, UrnOpenings> make_urn_pair(Bytes gold_message,
                                              Bytes silver_message, Rng& rng,
                                              Day created_at) {
  UrnOpenings openings;
  openings.gold.message = std::move(gold_message);
  openings.gold.nonce = draw_nonce(rng);
  openings.silver.message = std::move(silver_message);
  openings.silver.nonce = draw_nonce(rng);

  UrnPair pair;
  pair.created_at = created_at;
  pair.gold = commit(openings.gold.message, openings.gold.nonce);
  pair.silver = commit(openings.silver.message, openings.silver.nonce);
  if (pair.gold == pair.silver) {
    // Only reachable through a SHA-256 collision or an RNG that repeated a
    // nonce on equal messages.
    throw Error(ErrorCode::RngExhausted,
                "urn commitments collided; generator contract violated");
  }
  return {pair, std::move(openings)};
}

WitnessAttestation attest(std::string witness_id,
                          std::span<const std::uint8_t> witness_secret,
                          const UrnPair& pair, Day timestamp) {
  Sha256 hasher;
  hasher.update(witness_secret);
  hasher.update(pair.gold.digest);
  hasher.update(pair.silver.digest);
  append_le64(hasher, static_cast<std::uint64_t>(timestamp));
  return WitnessAttestation{std::move(witness_id), hasher.finish(), timestamp};
}

bool verify_attestation(const WitnessAttestation& attestation,
                        std::span<const std::uint8_t> witness_secret,
                        const UrnPair& pair) {
  WitnessAttestation recomputed =
      attest(attestation.witness_id, witness_secret, pair, attestation.timestamp);
  return recomputed.tag == attestation.tag;
}

Selection select(const UrnPair& pair, std::uint64_t beacon_seed) {
  (void)pair;  // the beacon is blind to the committed contents
  Rng beacon(beacon_seed);
  std::uint8_t draw = beacon.next_byte();
  Selection selection;
  selection.beacon_seed = beacon_seed;
  selection.draw = draw;
  selection.chosen = (draw % 2 == 0) ? UrnSide::Gold : UrnSide::Silver;
  return selection;
}

RevealOutcome reveal_verify(const UrnPair& pair, const Selection& selection,
                            std::span<const std::uint8_t> message,
                            std::span<const std::uint8_t> nonce) {
  Commitment recomputed = commit(message, nonce);
  const Commitment& expected =
      selection.chosen == UrnSide::Gold ? pair.gold : pair.silver;
  if (recomputed == expected) {
    return RevealOutcome{Verdict::Accepted, std::nullopt};
  }
  return RevealOutcome{Verdict::Rejected,
                       RevealEvidence{recomputed.digest, expected.digest}};
}

}  // namespace oraclesim::urn
