#include <doctest.h>

#include <set>

#include "oraclesim/hex.hpp"
#include "oraclesim/rng.hpp"
#include "oraclesim/sha256.hpp"

using namespace oraclesim;

TEST_CASE("sha256 matches the FIPS test vectors") {
  // published vectors, assertable directly
  CHECK(to_hex(Sha256::hash("")) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(Sha256::hash("abc")) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(to_hex(Sha256::hash(
            "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("sha256 streaming equals one-shot across chunk sizes") {
  std::string data(1000, '\0');
  Rng rng(7);
  for (char& c : data) c = static_cast<char>(rng.next_byte());
  Digest whole = Sha256::hash(data);
  for (std::size_t chunk : {1u, 3u, 63u, 64u, 65u, 257u}) {
    Sha256 hasher;
    for (std::size_t i = 0; i < data.size(); i += chunk) {
      hasher.update(data.substr(i, chunk));
    }
    CHECK(hasher.finish() == whole);
  }
}

TEST_CASE("hex round trip") {
  Bytes bytes = {0x00, 0x01, 0xab, 0xff, 0x7e};
  std::string hex = to_hex(bytes);
  CHECK(hex == "0001abff7e");
  CHECK(from_hex(hex) == bytes);
  CHECK_FALSE(from_hex("abc").has_value());   // odd length
  CHECK_FALSE(from_hex("zz").has_value());    // bad digit
}

TEST_CASE("rng is deterministic per seed") {
  Rng a(42), b(42), c(43);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.next_u64();
    all_equal = all_equal && (x == b.next_u64());
    any_diff = any_diff || (x != c.next_u64());
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("derived streams are label-independent") {
  std::uint64_t master = 99;
  CHECK(derive_seed(master, "alice") == derive_seed(master, "alice"));
  CHECK(derive_seed(master, "alice") != derive_seed(master, "bob"));
  CHECK(derive_seed(master, "alice") != derive_seed(master + 1, "alice"));

  // drawing from one stream never shifts a sibling stream
  Rng alice_before(derive_seed(master, "alice"));
  Rng bob(derive_seed(master, "bob"));
  for (int i = 0; i < 1000; ++i) bob.next_u64();
  Rng alice_after(derive_seed(master, "alice"));
  for (int i = 0; i < 10; ++i) {
    CHECK(alice_before.next_u64() == alice_after.next_u64());
  }
}

TEST_CASE("rng below is in range and roughly uniform") {
  Rng rng(5);
  std::array<int, 10> buckets{};
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t v = rng.below(10);
    REQUIRE(v < 10);
    ++buckets[v];
  }
  for (int count : buckets) {
    CHECK(count > 800);
    CHECK(count < 1200);
  }
}

TEST_CASE("fill_bytes produces distinct nonces") {
  Rng rng(1);
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) {
    Bytes nonce(32);
    rng.fill_bytes(nonce);
    seen.insert(to_hex(nonce));
  }
  CHECK(seen.size() == 100);
}
