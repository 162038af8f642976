#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "plogic/compress.hpp"
#include "plogic/errors.hpp"
#include "plogic/solve.hpp"
#include "support.hpp"

using namespace plogic;

namespace {

std::vector<Belief> chain3_beliefs() {
  return {Belief::point(0, 0.8), Belief::point(1, 0.7), Belief::point(2, 0.6),
          Belief::point(3, 0.8)};
}

// chain3 compressed system evaluated on the 0.01 grid in integer hundredths,
// without going through the constraint builder.
struct ChainGrid {
  int min_lower = std::numeric_limits<int>::max();
  int max_upper = std::numeric_limits<int>::min();
  int feasible_points = 0;
};

ChainGrid chain3_grid_oracle() {
  ChainGrid g;
  testing::for_each_grid_point(5, 100, [&](const std::vector<int>& w) {
    const int a1 = w[0] + w[1] + w[2] + w[3];
    const int a2_lo = w[0] + w[1] + w[2];
    const int a2_hi = a2_lo + w[4];
    const int a3_lo = w[0] + w[1];
    const int a3_hi = a3_lo + w[3] + w[4];
    const int rule = w[0] + w[2] + w[3] + w[4];
    if (a1 != 80 || rule != 80) return;
    if (a2_lo > 70 || a2_hi < 70 || a3_lo > 60 || a3_hi < 60) return;
    ++g.feasible_points;
    g.min_lower = std::min(g.min_lower, w[0]);
    g.max_upper = std::max(g.max_upper, w[0] + w[2] + w[3] + w[4]);
  });
  return g;
}

}  // namespace

TEST_CASE("solve_lp on the bare simplex") {
  ConstraintSystem s{3, {}, {}};
  LpResult r = solve_lp({1, 0, 0}, s, Direction::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.weights == std::vector<double>{1, 0, 0});

  r = solve_lp({3, 1, 2}, s, Direction::minimize);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.weights[1] == doctest::Approx(1.0));
}

TEST_CASE("solve_lp on the worked example system, against a grid oracle") {
  ChainGrid g = chain3_grid_oracle();
  REQUIRE(g.feasible_points > 0);
  CHECK(g.min_lower == 0);
  CHECK(g.max_upper == 80);

  ConstraintSystem s = build_system(conjunctive_mp_tableau(3), chain3_beliefs());
  LpResult low = solve_lp({1, 0, 0, 0, 0}, s, Direction::minimize);
  REQUIRE(low.status == LpStatus::optimal);
  CHECK(std::abs(low.objective - g.min_lower / 100.0) <= 1e-9);
  CHECK(feasible(s, low.weights));
  // w2 and w5 are pinned to 0.2 by the A1 and rule equalities.
  CHECK(low.weights[1] == doctest::Approx(0.2));
  CHECK(low.weights[4] == doctest::Approx(0.2));
}

TEST_CASE("solve_lp detects contradictory priors") {
  Tableau t = enumerate_worlds({atom("A"), atom("B")}, 2);
  ConstraintSystem s = build_system(t, {Belief::point(0, 0.3), Belief::point(1, 0.6)});
  // Same row twice with different values.
  s.constraints.push_back(s.constraints.front());
  s.constraints.back().rhs = 0.6;
  CHECK(solve_lp({1, 0, 0, 0}, s, Direction::minimize).status == LpStatus::infeasible);
  CHECK_THROWS_AS(solve_lp({1, 0}, s, Direction::minimize), std::invalid_argument);
}

TEST_CASE("solve_lp copes with redundant equality rows") {
  Tableau t = enumerate_worlds({atom("A"), parse("!A"), atom("B")}, 2);
  ConstraintSystem s = build_system(t, {Belief::point(0, 0.4), Belief::point(1, 0.6)});
  LpResult r = solve_lp(bound_rows(t, 2).lower, s, Direction::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(feasible(s, r.weights));
}

TEST_CASE("entail_interval") {
  Tableau packed = conjunctive_mp_tableau(3);
  Interval i = entail_interval(packed, chain3_beliefs(), 4);
  CHECK(i.lo == doctest::Approx(0.0).scale(1e-9));
  CHECK(i.hi == doctest::Approx(0.8).epsilon(1e-9));

  Tableau plain = enumerate_worlds(packed.sentences, 4);
  Interval j = entail_interval(plain, chain3_beliefs(), 4);
  CHECK(std::abs(i.lo - j.lo) <= 1e-9);
  CHECK(std::abs(i.hi - j.hi) <= 1e-9);

  Tableau qr = enumerate_worlds({parse("Q"), parse("Q -> R"), parse("R")}, 2);
  Interval mp = entail_interval(qr, {Belief::point(0, 1.0), Belief::point(1, 1.0)}, 2);
  CHECK(mp.lo == doctest::Approx(1.0));
  CHECK(mp.hi == doctest::Approx(1.0));

  Tableau ab = enumerate_worlds({atom("A"), parse("A & B"), atom("B")}, 2);
  CHECK_THROWS_AS(entail_interval(ab, {Belief::point(0, 0.3), Belief::point(1, 0.6)}, 2),
                  InfeasibleError);
}

TEST_CASE("target_interval_at") {
  Tableau t = conjunctive_mp_tableau(3);
  Interval a = target_interval_at(t, {0.2, 0.2, 0.2, 0.2, 0.2}, 4);
  CHECK(a.lo == doctest::Approx(0.2));
  CHECK(a.hi == doctest::Approx(0.8));
  Interval b = target_interval_at(t, {0.25, 0.25, 0.125, 0.1875, 0.1875}, 4);
  CHECK(b.lo == doctest::Approx(0.25));
  CHECK(b.hi == doctest::Approx(0.75));
  Interval c = target_interval_at(t, {0.2, 0.2, 0.2, 0.2, 0.2}, 0);
  CHECK(c.lo == c.hi);
  CHECK_THROWS_AS(target_interval_at(t, {0.5, 0.5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(target_interval_at(t, {0.5, 0.5, 0.5, 0, 0}, 4), std::invalid_argument);
}

TEST_CASE("feasible") {
  ConstraintSystem s = build_system(conjunctive_mp_tableau(3), chain3_beliefs());
  CHECK(feasible(s, {0.2, 0.2, 0.2, 0.2, 0.2}));
  CHECK_FALSE(feasible(s, {1, 0, 0, 0, 0}));
  CHECK_FALSE(feasible(s, {0.4, 0.2, 0.2, 0.4, -0.2}));
  CHECK_FALSE(feasible(ConstraintSystem{2, {}, {}}, {1.5, -0.5}));
  CHECK(feasible(s, {0.2 + 5e-7, 0.2, 0.2, 0.2, 0.2 - 5e-7}));
  CHECK_THROWS_AS(feasible(s, {1.0}), std::invalid_argument);
}

TEST_CASE("property: LP optimum agrees with a 0.05 grid oracle on small problems") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, 20);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  int problems = 0;
  while (problems < 40) {
    auto sentences = testing::random_problem(rng, 3, 4);
    Tableau t = enumerate_worlds(sentences, sentences.size() - 1);
    if (t.world_count() > 5 || t.world_count() < 2) continue;
    ++problems;
    const std::size_t n = t.world_count();

    // Priors from a grid distribution keep the grid feasible.
    std::vector<int> w0(n, 0);
    int left = 20;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      w0[j] = std::min(left, pick(rng));
      left -= w0[j];
    }
    w0[n - 1] = left;
    std::vector<Belief> beliefs;
    for (std::size_t s = 0; s < t.source_count; ++s) {
      int p = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (t.worlds[j][s] == Truth::t) p += w0[j];
      beliefs.push_back(Belief::point(s, p / 20.0));
    }
    ConstraintSystem sys = build_system(t, beliefs);

    std::vector<double> c(n);
    for (auto& x : c) x = coeff(rng);
    LpResult lp = solve_lp(c, sys, Direction::maximize);
    REQUIRE(lp.status == LpStatus::optimal);
    CHECK(feasible(sys, lp.weights));

    double grid_best = -std::numeric_limits<double>::infinity();
    testing::for_each_grid_point(n, 20, [&](const std::vector<int>& w) {
      for (std::size_t s = 0; s < t.source_count; ++s) {
        int p = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (t.worlds[j][s] == Truth::t) p += w[j];
        if (std::abs(p / 20.0 - beliefs[s].value()) > 1e-12) return;
      }
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += c[j] * w[j] / 20.0;
      grid_best = std::max(grid_best, v);
    });
    CHECK(grid_best <= lp.objective + 1e-9);
    CHECK(lp.objective - grid_best <= 0.05 + 1e-9);
  }
}

TEST_CASE("property: compression leaves entailment intervals unchanged") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto sentences = testing::random_problem(rng, 4, 5);
    const std::size_t sources = sentences.size() - 1;
    Tableau plain = enumerate_worlds(sentences, sources);
    Tableau packed = compress_tableau(plain);
    std::vector<double> w0(plain.world_count());
    double total = 0.0;
    for (auto& x : w0) total += (x = u(rng));
    for (auto& x : w0) x /= total;
    std::vector<Belief> beliefs;
    for (std::size_t s = 0; s < sources; ++s)
      beliefs.push_back(Belief::point(s, dot(bound_rows(plain, s).lower, w0)));

    Interval a = entail_interval(plain, beliefs, sources);
    Interval b = entail_interval(packed, beliefs, sources);
    CHECK(std::abs(a.lo - b.lo) <= 1e-9);
    CHECK(std::abs(a.hi - b.hi) <= 1e-9);

    // Any feasible W gives a sub-interval of the entailment interval.
    auto cover = covering_worlds(plain, packed);
    Interval at = target_interval_at(packed, project_weights(w0, cover, packed.world_count()),
                                     sources);
    CHECK(at.lo >= b.lo - 1e-9);
    CHECK(at.hi <= b.hi + 1e-9);
  }
}
