#include <doctest.h>

#include <random>

#include "plogic/compress.hpp"
#include "support.hpp"

using namespace plogic;
using testing::world_of;
using testing::worlds_of;

TEST_CASE("merge_pair") {
  CHECK(merge_pair(world_of("011"), world_of("111")) == world_of("*11"));
  CHECK_FALSE(merge_pair(world_of("011"), world_of("101")));
  CHECK_FALSE(merge_pair(world_of("011"), world_of("011")));
  CHECK_FALSE(merge_pair(world_of("*11"), world_of("011")));
  CHECK_THROWS_AS(merge_pair(world_of("01"), world_of("011")), std::invalid_argument);

  // Oracle: the inputs' expansions are disjoint and their union is the
  // merged world's expansion.
  auto merged = merge_pair(world_of("*10"), world_of("*11"));
  REQUIRE(merged);
  CHECK(*merged == world_of("*1*"));
  auto a = expand_world(world_of("*10"));
  auto b = expand_world(world_of("*11"));
  CHECK(expansions_disjoint({world_of("*10"), world_of("*11")}));
  a.insert(a.end(), b.begin(), b.end());
  CHECK(same_world_set(a, expand_world(*merged)));
}

TEST_CASE("compress the sixteen-world table") {
  Tableau plain = enumerate_worlds(
      {parse("A1"), parse("A2"), parse("A3"), parse("A1 & A2 & A3 -> B"), parse("B")}, 4);
  CompressionStats stats;
  Tableau c = compress_tableau(plain, &stats);
  CHECK(verify_equivalence(plain, c));
  CHECK(c.world_count() <= 16);
  CHECK(stats.worlds_before == 16);
  CHECK(stats.worlds_after == c.world_count());
  CHECK(stats.merges == 16 - c.world_count());
  // Greedy lexicographic merging stops at 7 worlds here; the closed form has 5.
  CHECK(c.world_count() == 7);
}

TEST_CASE("parity tableaux do not compress") {
  for (int m = 2; m <= 5; ++m) {
    CAPTURE(m);
    auto sentences = testing::parity_problem(m);
    Tableau plain = enumerate_worlds(sentences, static_cast<std::size_t>(m));
    CHECK(plain.world_count() == (std::size_t{1} << m));
    CompressionStats stats;
    Tableau c = compress_tableau(plain, &stats);
    CHECK(stats.merges == 0);
    CHECK(c.worlds == plain.worlds);
  }
}

TEST_CASE("single world is left alone") {
  Tableau t{{atom("A")}, worlds_of({"1"}), 1};
  CHECK(compress_tableau(t).worlds == t.worlds);
}

TEST_CASE("compress rejects overlapping input") {
  Tableau t{{atom("A"), atom("B")}, worlds_of({"1*", "11"}), 1};
  CHECK_THROWS_AS(compress_tableau(t), std::invalid_argument);
}

TEST_CASE("verify_equivalence") {
  Tableau plain = enumerate_worlds(
      {parse("A1"), parse("A2"), parse("A3"), parse("A1 & A2 & A3 -> B"), parse("B")}, 4);
  CHECK(verify_equivalence(plain, conjunctive_mp_tableau(3)));
  CHECK(verify_equivalence(plain, plain));

  Tableau qr = enumerate_worlds({parse("Q"), parse("Q -> R"), parse("R")}, 2);
  Tableau packed{qr.sentences, worlds_of({"*11", "100", "010"}), 2};
  CHECK(verify_equivalence(qr, packed));

  Tableau missing{qr.sentences, worlds_of({"*11", "100"}), 2};
  CHECK_FALSE(verify_equivalence(qr, missing));
  Tableau overlapping{qr.sentences, worlds_of({"*11", "111", "100", "010"}), 2};
  CHECK_FALSE(verify_equivalence(qr, overlapping));

  Tableau other{{atom("X")}, worlds_of({"1", "0"}), 1};
  CHECK_THROWS_AS(verify_equivalence(qr, other), std::invalid_argument);
}

TEST_CASE("covering_worlds and project_weights") {
  Tableau qr = enumerate_worlds({parse("Q"), parse("Q -> R"), parse("R")}, 2);
  Tableau packed{qr.sentences, worlds_of({"*11", "100", "010"}), 2};
  auto cover = covering_worlds(qr, packed);
  CHECK(cover == std::vector<std::size_t>{0, 1, 0, 2});
  auto w = project_weights({0.1, 0.2, 0.3, 0.4}, cover, 3);
  CHECK(w[0] == doctest::Approx(0.4));
  CHECK(w[1] == doctest::Approx(0.2));
  CHECK(w[2] == doctest::Approx(0.4));
}

TEST_CASE("property: compression preserves the partition, is monotone and idempotent") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto sentences = testing::random_problem(rng, 4, 5);
    Tableau plain = enumerate_worlds(sentences, sentences.size() - 1);
    Tableau once = compress_tableau(plain);
    CHECK(verify_equivalence(plain, once));
    CHECK(once.world_count() <= plain.world_count());
    CompressionStats again;
    Tableau twice = compress_tableau(once, &again);
    CHECK(twice.world_count() == once.world_count());
    CHECK(again.merges == 0);
  }
}
