#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "plogic/constraints.hpp"
#include "plogic/sentence.hpp"
#include "plogic/worlds.hpp"

namespace plogic::cli {

// Parsed `.plp` problem. Sources keep file order; the target is appended
// after them.
struct ProblemSpec {
  std::vector<Sentence> sentences;
  std::vector<Belief> beliefs;
  std::size_t source_count = 0;
  std::size_t atom_cap = default_atom_cap;
  bool conj_mp_schema = false;

  std::size_t target_index() const { return source_count; }
  const Belief* belief_for(std::size_t sentence) const;
  // Index of the sentence structurally equal to `s`, if declared.
  std::optional<std::size_t> find(const Sentence& s) const;
};

// Line grammar ('#' starts a comment):
//   sentence <formula> [prior <p> | prior in [<lo>, <hi>]]
//   target <formula>
//   option atoms-cap <n>
//   option schema conj-mp
// Formulas containing spaces are double-quoted. Throws SyntaxError whose
// position() is the 1-based line number.
ProblemSpec parse_problem(std::string_view text);

}  // namespace plogic::cli
