#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "plogic/cli/problem_file.hpp"
#include "plogic/revise.hpp"

namespace plogic::cli {

struct AssessmentDecl {
  Sentence sentence;
  bool automatic = false;
  std::size_t world = 0;  // 1-based, into the compressed tableau
  double value = 0.0;
  std::size_t line = 0;
};

struct EvidenceDecl {
  Sentence sentence;
  std::variant<Likelihood, PosteriorForm> form;
  std::size_t line = 0;
};

// Parsed `.plev` evidence file, not yet checked against a tableau.
struct EvidenceSpec {
  std::optional<std::vector<double>> prior_solution;
  std::vector<AssessmentDecl> assessments;
  EvidenceDecl evidence;
};

// Line grammar ('#' starts a comment):
//   prior-solution <w1> <w2> ...
//   assess <formula> world <j> <p>
//   assess <formula> auto
//   evidence on <formula> likelihood <Pr(E|S)> <Pr(E|!S)>
//   evidence on <formula> posterior <Pr(S|E)>
// Exactly one evidence line. Throws SyntaxError (position = line number).
EvidenceSpec parse_evidence(std::string_view text);

// Evidence bound to a problem and its compressed tableau.
struct ResolvedEvidence {
  std::vector<double> prior;
  std::map<std::size_t, Assessment> assessments;  // by sentence index
  Evidence evidence;
  std::vector<std::string> warnings;
};

// Resolves sentence references, world indices, `auto` assessments and the
// representative prior (the midpoint prior when none is given). Throws
// std::invalid_argument on unknown sentences or out-of-range worlds and
// InfeasibleError / InconsistencyError for inputs that contradict the
// beliefs. User assessments that miss a point prior produce a warning.
ResolvedEvidence resolve_evidence(const EvidenceSpec& spec, const ProblemSpec& problem,
                                  const Tableau& tableau);

}  // namespace plogic::cli
