#pragma once

// Generators and brute-force oracles shared by the test suites. Nothing here
// calls into the code paths it is used to check.

#include <cstddef>
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "plogic/sentence.hpp"
#include "plogic/worlds.hpp"

namespace plogic::testing {

using Values = std::map<std::string, bool>;

// A sentence together with a semantics built alongside it.
struct Generated {
  Sentence sentence;
  std::function<bool(const Values&)> truth;
};

inline Generated random_sentence(std::mt19937& rng, int atom_count, int depth) {
  std::uniform_int_distribution<int> pick_atom(1, atom_count);
  std::uniform_int_distribution<int> pick_op(0, depth <= 0 ? 0 : 6);
  int op = pick_op(rng);
  if (op <= 1) {
    std::string name = "P" + std::to_string(pick_atom(rng));
    return {atom(name), [name](const Values& v) { return v.at(name); }};
  }
  if (op == 2) {
    Generated c = random_sentence(rng, atom_count, depth - 1);
    return {negate(c.sentence), [f = c.truth](const Values& v) { return !f(v); }};
  }
  Generated a = random_sentence(rng, atom_count, depth - 1);
  Generated b = random_sentence(rng, atom_count, depth - 1);
  auto fa = a.truth;
  auto fb = b.truth;
  switch (op) {
    case 3:
      return {conj(a.sentence, b.sentence), [=](const Values& v) { return fa(v) && fb(v); }};
    case 4:
      return {disj(a.sentence, b.sentence), [=](const Values& v) { return fa(v) || fb(v); }};
    case 5:
      return {implies(a.sentence, b.sentence), [=](const Values& v) { return !fa(v) || fb(v); }};
    default:
      return {iff(a.sentence, b.sentence), [=](const Values& v) { return fa(v) == fb(v); }};
  }
}

// Random problem: up to `max_sentences` distinct sentences over at most
// `max_atoms` atoms; the last one is the target.
inline std::vector<Sentence> random_problem(std::mt19937& rng, int max_atoms, int max_sentences) {
  std::uniform_int_distribution<int> atoms(std::min(2, max_atoms), max_atoms);
  std::uniform_int_distribution<int> count(2, max_sentences);
  const int k = atoms(rng);
  const int n = count(rng);
  std::vector<Sentence> out;
  for (int tries = 0; static_cast<int>(out.size()) < n && tries < 100; ++tries) {
    Sentence s = random_sentence(rng, k, 3).sentence;
    bool fresh = true;
    for (const auto& e : out) fresh = fresh && !(e == s);
    if (fresh) out.push_back(s);
  }
  return out;
}

// Distinct sentence vectors over every assignment, by direct evaluation with
// an explicit map; order-insensitive comparisons only.
inline std::vector<World> brute_force_worlds(const std::vector<Generated>& sentences,
                                             const std::vector<std::string>& atoms) {
  std::vector<World> out;
  const std::size_t k = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Values v;
    for (std::size_t i = 0; i < k; ++i) v[atoms[i]] = (mask >> i) & 1U;
    World w;
    for (const auto& s : sentences) w.push_back(s.truth(v) ? Truth::t : Truth::f);
    bool fresh = true;
    for (const auto& e : out) fresh = fresh && e != w;
    if (fresh) out.push_back(w);
  }
  return out;
}

// Worlds written as strings of '1', '0', '*'.
inline World world_of(const std::string& s) {
  World w;
  for (char c : s) w.push_back(c == '1' ? Truth::t : c == '0' ? Truth::f : Truth::dc);
  return w;
}

inline std::vector<World> worlds_of(std::initializer_list<const char*> cols) {
  std::vector<World> out;
  for (const char* c : cols) out.push_back(world_of(c));
  return out;
}

// Sources S1..Sm and the target S1 xor ... xor Sm, with a xor b written
// as a <-> !b.
inline std::vector<Sentence> parity_problem(int m) {
  std::vector<Sentence> out;
  for (int i = 1; i <= m; ++i) out.push_back(atom("S" + std::to_string(i)));
  Sentence target = out.front();
  for (int i = 1; i < m; ++i) target = iff(target, negate(out[static_cast<std::size_t>(i)]));
  out.push_back(target);
  return out;
}

// Calls f(w) for every weight vector of `n` components that are multiples
// of 1/steps summing to 1, with w given in integer units of 1/steps.
inline void for_each_grid_point(std::size_t n, int steps,
                                const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      w[i] = left;
      f(w);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      w[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, steps);
}

}  // namespace plogic::testing
