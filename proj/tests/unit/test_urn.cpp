#include <doctest.h>

#include <array>
#include <set>

#include "oraclesim/error.hpp"
#include "oraclesim/urn/urn.hpp"

using namespace oraclesim;
using namespace oraclesim::urn;

namespace {

Nonce zero_nonce() { return Nonce{}; }

Bytes bytes(std::string_view text) { return to_bytes(text); }

}  // namespace

TEST_CASE("commit is deterministic and nonce-length checked") {
  Nonce nonce{};
  nonce[0] = 0xaa;
  Commitment a = commit(bytes("rent the land"), nonce);
  Commitment b = commit(bytes("rent the land"), nonce);
  CHECK(a == b);

  Bytes short_nonce(31, 0);
  CHECK_THROWS_AS(commit(bytes("x"), short_nonce), Error);
  try {
    commit(bytes("x"), short_nonce);
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::BadNonceLength);
  }
}

TEST_CASE("commit matches externally computed sha-256 vectors") {
  // frozen from an independent SHA-256 tool: sha256(message || nonce)
  CHECK(commit(bytes("rent"), zero_nonce()).hex() ==
        "99f4f4e76322bfc631364708061ff3bb4a4b7184b594d36ef60adaad02426e71");
  CHECK(commit(bytes(""), zero_nonce()).hex() ==
        "66687aadf862bd776c8fc18b8e9f8e20089714856ee233b3902a591d0d5f2925");
}

TEST_CASE("urn pairs separate equal messages and reproduce under a seed") {
  Rng rng_a(123);
  auto [pair_a, openings_a] = make_urn_pair(bytes("same"), bytes("same"), rng_a, 5);
  CHECK(pair_a.gold != pair_a.silver);
  CHECK(openings_a.gold.nonce != openings_a.silver.nonce);
  CHECK(pair_a.created_at == 5);

  Rng rng_b(123);
  auto [pair_b, openings_b] = make_urn_pair(bytes("same"), bytes("same"), rng_b, 5);
  CHECK(pair_a.gold == pair_b.gold);
  CHECK(pair_a.silver == pair_b.silver);
  CHECK(openings_a.gold.nonce == openings_b.gold.nonce);

  // openings verify against their own commitments
  CHECK(commit(openings_a.gold.message, openings_a.gold.nonce) == pair_a.gold);
  CHECK(commit(openings_a.silver.message, openings_a.silver.nonce) == pair_a.silver);
}

TEST_CASE("attestations verify with the right secret only") {
  Rng rng(9);
  auto [pair, openings] = make_urn_pair(bytes("a"), bytes("b"), rng, 3);
  Bytes secret(32, 0x5c);
  Bytes wrong_secret(32, 0x5d);

  WitnessAttestation attestation = attest("witness-1", secret, pair, 3);
  CHECK(attestation.timestamp == 3);
  CHECK(verify_attestation(attestation, secret, pair));
  CHECK_FALSE(verify_attestation(attestation, wrong_secret, pair));

  // any flipped digest bit must break the tag
  Rng flip_rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    UrnPair mutated = pair;
    std::size_t byte = flip_rng.below(32);
    std::uint8_t bit = static_cast<std::uint8_t>(1u << flip_rng.below(8));
    if (flip_rng.below(2) == 0) {
      mutated.gold.digest[byte] ^= bit;
    } else {
      mutated.silver.digest[byte] ^= bit;
    }
    CHECK_FALSE(verify_attestation(attestation, secret, mutated));
  }

  // and a shifted timestamp as well
  WitnessAttestation shifted = attestation;
  shifted.timestamp += 1;
  CHECK_FALSE(verify_attestation(shifted, secret, pair));
}

TEST_CASE("selection is deterministic, seed-driven and message-blind") {
  Rng rng(4);
  auto [pair, openings] = make_urn_pair(bytes("m0"), bytes("m1"), rng, 0);

  Selection first = select(pair, 777);
  Selection second = select(pair, 777);
  CHECK(first.chosen == second.chosen);
  CHECK(first.draw == second.draw);
  CHECK(first.beacon_seed == 777);
  CHECK((first.draw % 2 == 0) == (first.chosen == UrnSide::Gold));

  // permuting messages never changes the selection at a fixed seed
  Rng rng_swapped(4);
  auto [swapped, swapped_openings] =
      make_urn_pair(bytes("m1"), bytes("m0"), rng_swapped, 0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK(select(pair, seed).chosen == select(swapped, seed).chosen);
  }
}

TEST_CASE("selection is roughly uniform over seeds") {
  Rng rng(4);
  auto [pair, openings] = make_urn_pair(bytes("m0"), bytes("m1"), rng, 0);
  int gold = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    if (select(pair, seed).chosen == UrnSide::Gold) ++gold;
  }
  CHECK(gold > 4800);
  CHECK(gold < 5200);
}

TEST_CASE("honest reveals are accepted, tampered ones rejected with evidence") {
  Rng rng(21);
  auto [pair, openings] = make_urn_pair(bytes("keep the land"),
                                        bytes("rent the land"), rng, 1);
  Selection selection = select(pair, 42);
  const Opening& chosen =
      selection.chosen == UrnSide::Gold ? openings.gold : openings.silver;
  const Opening& other =
      selection.chosen == UrnSide::Gold ? openings.silver : openings.gold;

  RevealOutcome honest =
      reveal_verify(pair, selection, chosen.message, chosen.nonce);
  CHECK(honest.verdict == Verdict::Accepted);
  CHECK_FALSE(honest.evidence.has_value());

  // opening the other urn as if it were the chosen one
  RevealOutcome wrong_urn =
      reveal_verify(pair, selection, other.message, other.nonce);
  CHECK(wrong_urn.verdict == Verdict::Rejected);
  REQUIRE(wrong_urn.evidence.has_value());
  CHECK(wrong_urn.evidence->expected !=
        wrong_urn.evidence->recomputed);

  // single-byte mutations of message or nonce
  Rng mutate_rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    Bytes message = chosen.message;
    Nonce nonce = chosen.nonce;
    if (mutate_rng.below(2) == 0) {
      message[mutate_rng.below(message.size())] ^=
          static_cast<std::uint8_t>(1 + mutate_rng.below(255));
    } else {
      nonce[mutate_rng.below(nonce.size())] ^=
          static_cast<std::uint8_t>(1 + mutate_rng.below(255));
    }
    RevealOutcome outcome = reveal_verify(pair, selection, message, nonce);
    CHECK(outcome.verdict == Verdict::Rejected);
  }
}

TEST_CASE("binding: no mutated message opens the same commitment") {
  Rng rng(33);
  Nonce nonce = draw_nonce(rng);
  Bytes message = bytes("the chosen instruction");
  Commitment original = commit(message, nonce);
  Rng search(34);
  for (int trial = 0; trial < 2000; ++trial) {
    Bytes candidate = message;
    candidate[search.below(candidate.size())] ^=
        static_cast<std::uint8_t>(1 + search.below(255));
    CHECK_FALSE(commit(candidate, nonce) == original);
  }
}

TEST_CASE("hiding: digests of equal messages look balanced per bit") {
  Rng rng(55);
  Bytes message = bytes("identical message");
  std::array<int, 256> ones{};
  constexpr int kSamples = 10000;
  std::set<std::string> digests;
  for (int i = 0; i < kSamples; ++i) {
    Commitment c = commit(message, draw_nonce(rng));
    digests.insert(c.hex());
    for (int bit = 0; bit < 256; ++bit) {
      if (c.digest[bit / 8] & (1u << (bit % 8))) ++ones[bit];
    }
  }
  CHECK(digests.size() == kSamples);  // all distinct
  for (int bit = 0; bit < 256; ++bit) {
    CHECK(ones[bit] > kSamples * 0.47);
    CHECK(ones[bit] < kSamples * 0.53);
  }
}

TEST_CASE("end-to-end round trip always accepts the honest opening") {
  Rng rng(66);
  for (int trial = 0; trial < 50; ++trial) {
    Bytes m0(1 + rng.below(64));
    Bytes m1(1 + rng.below(64));
    rng.fill_bytes(m0);
    rng.fill_bytes(m1);
    auto [pair, openings] = make_urn_pair(m0, m1, rng, trial);

    Bytes secret(32);
    rng.fill_bytes(secret);
    for (int w = 0; w < 3; ++w) {
      WitnessAttestation attestation =
          attest("w" + std::to_string(w), secret, pair, trial);
      CHECK(verify_attestation(attestation, secret, pair));
    }

    Selection selection = select(pair, rng.next_u64());
    const Opening& opening =
        selection.chosen == UrnSide::Gold ? openings.gold : openings.silver;
    CHECK(reveal_verify(pair, selection, opening.message, opening.nonce).verdict ==
          Verdict::Accepted);
  }
}
