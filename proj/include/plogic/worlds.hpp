#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plogic/sentence.hpp"

namespace plogic {

// Three-valued truth. `dc` ("don't care") marks a sentence that may take
// either value within a compressed world.
enum class Truth : std::uint8_t { f, t, dc };

// One truth value per tableau sentence, in the tableau's sentence order.
using World = std::vector<Truth>;

// Sentence-by-world matrix stored column-wise. The first `source_count`
// sentences are sources; the rest are targets.
struct Tableau {
  std::vector<Sentence> sentences;
  std::vector<World> worlds;
  std::size_t source_count = 0;

  std::size_t sentence_count() const { return sentences.size(); }
  std::size_t world_count() const { return worlds.size(); }
  // Row view: the truth value of `sentence` in every world.
  std::vector<Truth> row(std::size_t sentence) const;
  bool has_dc() const;
};

inline constexpr std::size_t default_atom_cap = 20;

// Every distinct sentence-truth vector realized by some atom assignment.
// Assignments are visited in descending binary order (first atom is the
// most significant bit, true = 1) and the first occurrence of each vector
// is kept. Throws std::length_error when the atom count exceeds `atom_cap`.
Tableau enumerate_worlds(const std::vector<Sentence>& sentences, std::size_t source_count,
                         std::size_t atom_cap = default_atom_cap);

// Closed-form compressed tableau for the schema
//   antecedents A1..An, implication (A1 & ... & An) -> B, consequent B
// with n + 2 worlds: all true; antecedents true with implication and
// consequent false; then for each i from n down to 1, conjunct i false,
// earlier conjuncts true, later ones dc, implication true and consequent dc.
// The consequent is the single target.
Tableau conjunctive_mp_tableau(std::size_t n);
Tableau conjunctive_mp_tableau(const std::vector<std::string>& antecedents,
                               const std::string& consequent);

// All 2^k dc-free worlds obtained by substituting t/f for the k dc entries.
std::vector<World> expand_world(const World& w);

// True iff no two-valued world lies in the expansion of two different worlds.
bool expansions_disjoint(const std::vector<World>& worlds);

// dc-free tableau whose worlds are the union of the expansions. Throws
// std::invalid_argument when expansions overlap.
Tableau expand_tableau(const Tableau& t);

// Order-insensitive comparison of world lists.
bool same_world_set(std::vector<World> a, std::vector<World> b);

char truth_char(Truth v);

// One line per sentence: the sentence text, then one of 1, 0, * per world.
std::string render_tableau(const Tableau& t);

}  // namespace plogic
