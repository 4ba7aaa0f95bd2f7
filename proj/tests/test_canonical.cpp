#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "oracle.hpp"
#include "qmut/canonical.hpp"

using namespace qmut;

TEST_CASE("both orientations of a single arrow share one canonical form") {
  const Quiver a = Quiver::from_rows({{0, 1}, {-1, 0}});
  const Quiver b = Quiver::from_rows({{0, -1}, {1, 0}});
  CHECK(canonicalize(a).matrix == canonicalize(b).matrix);
  CHECK(is_isomorphic(a, b));
}

TEST_CASE("the doubled triangle is canonically stable under mutation") {
  const Quiver markov = gen::markov_quiver();
  CHECK(canonicalize(markov).matrix == canonicalize(mutate(markov, 0)).matrix);
}

TEST_CASE("linear path and middle-sink path are not isomorphic") {
  const Quiver linear = gen::path3();
  const Quiver sink = Quiver::from_rows({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
  CHECK(canonicalize(linear).matrix != canonicalize(sink).matrix);
  CHECK_FALSE(is_isomorphic(linear, sink));
  // Verified against the all-permutations scan.
  CHECK(oracle::min_matrix(linear) != oracle::min_matrix(sink));
}

TEST_CASE("canonical matrix equals the all-permutations minimum") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = gen::rand_int(rng, 1, 6);
    const Quiver q = gen::random_quiver(rng, n, 3);
    CHECK(canonicalize(q).matrix == oracle::min_matrix(q));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::rand_int(rng, 2, 7);
    const Quiver q = gen::random_quiver(rng, n, 3);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[gen::rand_int(rng, 0, i)]);
    const CanonicalForm a = canonicalize(q);
    const CanonicalForm b = canonicalize(permute(q, perm));
    CHECK(a.matrix == b.matrix);
    CHECK(a.hash == b.hash);
  }
}

TEST_CASE("canonicalize is idempotent and perm realizes the minimum") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::rand_int(rng, 1, 7);
    const Quiver q = gen::random_quiver(rng, n, 4);
    const CanonicalForm form = canonicalize(q);
    CHECK(permute(q, form.perm).entries() == form.matrix);
    CHECK(canonicalize(canonical_quiver(form)).matrix == form.matrix);
  }
}

TEST_CASE("isomorphism behaves like an equivalence relation on samples") {
  std::mt19937_64 rng(808);
  std::vector<Quiver> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(gen::random_quiver(rng, 4, 2));
  // Seed some deliberate isomorphic pairs.
  pool.push_back(permute(pool[0], {2, 0, 3, 1}));
  pool.push_back(permute(pool[1], {3, 2, 1, 0}));
  for (const Quiver& a : pool) {
    CHECK(is_isomorphic(a, a));
    for (const Quiver& b : pool) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
      for (const Quiver& c : pool) {
        if (is_isomorphic(a, b) && is_isomorphic(b, c))
          CHECK(is_isomorphic(a, c));
      }
    }
  }
}

TEST_CASE("vertex cap is enforced") {
  CHECK_THROWS_AS(canonicalize(Quiver(13)), CanonLimitError);
  CHECK_NOTHROW(canonicalize(Quiver(13), 16));
}

TEST_CASE("labels do not affect canonical form or hash") {
  Quiver q = gen::path3();
  const CanonicalForm plain = canonicalize(q);
  q.set_label(1, "middle");
  const CanonicalForm labeled = canonicalize(q);
  CHECK(plain.matrix == labeled.matrix);
  CHECK(plain.hash == labeled.hash);
}

TEST_CASE("hash serialization layout is the documented one") {
  // Single arrow: canonical matrix is [[0, -1], [1, 0]].
  const CanonicalForm form =
      canonicalize(Quiver::from_rows({{0, 1}, {-1, 0}}));
  CHECK(form.matrix == std::vector<Entry>{0, -1, 1, 0});

  const std::vector<std::uint8_t> expected = {
      0x00, 0x00, 0x00, 0x02,  // n = 2, big-endian 32-bit
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,  // 0
      0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,  // -1
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01,  // 1
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,  // 0
  };
  CHECK(canonical_bytes(form.n, form.matrix) == expected);

  // FNV-1a over those bytes, folded by hand here.
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t byte : expected) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  CHECK(form.hash == h);
  CHECK(hash_hex(form.hash).size() == 16);
}
