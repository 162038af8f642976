#include "plogic/cli/evidence_file.hpp"

#include <stdexcept>

#include "line_tokens.hpp"
#include "plogic/errors.hpp"
#include "plogic/solve.hpp"

namespace plogic::cli {

using detail::line_error;

EvidenceSpec parse_evidence(std::string_view text) {
  std::optional<std::vector<double>> prior_solution;
  std::vector<AssessmentDecl> assessments;
  std::optional<EvidenceDecl> evidence;
  auto lines = detail::split_lines(text);

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line = n + 1;
    auto tokens = detail::tokenize(lines[n], line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0].text;

    if (keyword == "prior-solution") {
      if (prior_solution) line_error(line, "duplicate prior-solution");
      if (tokens.size() < 2) line_error(line, "prior-solution needs at least one weight");
      std::vector<double> w;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        w.push_back(detail::parse_probability(tokens[i].text, line));
      prior_solution = std::move(w);
    } else if (keyword == "assess") {
      if (tokens.size() < 3) line_error(line, "assess needs a formula and 'auto' or 'world <j> <p>'");
      AssessmentDecl decl{detail::parse_formula(tokens[1], line)};
      decl.line = line;
      if (tokens.size() == 3 && tokens[2].text == "auto") {
        decl.automatic = true;
      } else if (tokens.size() == 5 && tokens[2].text == "world") {
        decl.world = detail::parse_count(tokens[3].text, line);
        if (decl.world == 0) line_error(line, "world indices start at 1");
        decl.value = detail::parse_probability(tokens[4].text, line);
      } else {
        line_error(line, "expected 'assess <formula> auto' or 'assess <formula> world <j> <p>'");
      }
      assessments.push_back(std::move(decl));
    } else if (keyword == "evidence") {
      if (evidence) line_error(line, "only one evidence declaration is allowed");
      if (tokens.size() < 4 || tokens[1].text != "on")
        line_error(line, "expected 'evidence on <formula> likelihood|posterior ...'");
      EvidenceDecl decl{detail::parse_formula(tokens[2], line), Likelihood{}, line};
      if (tokens[3].text == "likelihood" && tokens.size() == 6) {
        decl.form = Likelihood{detail::parse_probability(tokens[4].text, line),
                               detail::parse_probability(tokens[5].text, line)};
      } else if (tokens[3].text == "posterior" && tokens.size() == 5) {
        decl.form = PosteriorForm{detail::parse_probability(tokens[4].text, line)};
      } else {
        line_error(line, "expected 'likelihood <pE|S> <pE|notS>' or 'posterior <pS|E>'");
      }
      evidence = std::move(decl);
    } else {
      line_error(line, "unknown declaration '" + keyword + "'");
    }
  }
  if (!evidence) line_error(lines.size(), "missing evidence declaration");
  return EvidenceSpec{std::move(prior_solution), std::move(assessments), std::move(*evidence)};
}

namespace {

std::size_t sentence_index(const ProblemSpec& problem, const Sentence& s, std::size_t line) {
  auto index = problem.find(s);
  if (!index)
    throw std::invalid_argument("line " + std::to_string(line) + ": unknown sentence " + to_text(s));
  return *index;
}

}  // namespace

ResolvedEvidence resolve_evidence(const EvidenceSpec& spec, const ProblemSpec& problem,
                                  const Tableau& tableau) {
  ResolvedEvidence out;
  ConstraintSystem system = build_system(tableau, problem.beliefs);
  if (spec.prior_solution) {
    if (spec.prior_solution->size() != tableau.world_count())
      throw std::invalid_argument("prior-solution has " +
                                  std::to_string(spec.prior_solution->size()) +
                                  " weights but the tableau has " +
                                  std::to_string(tableau.world_count()) + " worlds");
    out.prior = select_prior(system, UserPrior{*spec.prior_solution});
  } else {
    out.prior = select_prior(system, MidpointPrior{});
  }

  std::map<std::size_t, bool> manual;
  for (const auto& decl : spec.assessments) {
    const std::size_t s = sentence_index(problem, decl.sentence, decl.line);
    auto [it, fresh] = out.assessments.try_emplace(s, Assessment{s, {}});
    Assessment& a = it->second;
    if (decl.automatic) {
      const Belief* b = problem.belief_for(s);
      if (!b || !b->is_point())
        throw std::invalid_argument("line " + std::to_string(decl.line) +
                                    ": 'auto' needs a point prior on " + to_text(decl.sentence));
      Assessment derived = auto_assess(tableau, out.prior, s, b->value());
      for (const auto& [world, value] : derived.values) a.values[world] = value;
    } else {
      const std::size_t j = decl.world - 1;
      if (j >= tableau.world_count())
        throw std::invalid_argument("line " + std::to_string(decl.line) + ": world " +
                                    std::to_string(decl.world) + " out of range (1.." +
                                    std::to_string(tableau.world_count()) + ")");
      if (tableau.worlds[j][s] != Truth::dc)
        throw std::invalid_argument("line " + std::to_string(decl.line) + ": " +
                                    to_text(decl.sentence) + " is not don't-care in world " +
                                    std::to_string(decl.world));
      a.values[j] = decl.value;
      manual[s] = true;
    }
  }

  for (const auto& [s, flag] : manual) {
    const Belief* b = problem.belief_for(s);
    if (b && b->is_point() &&
        !check_assessment(tableau, out.prior, s, b->value(), out.assessments.at(s)))
      out.warnings.push_back("assessment for " + to_text(problem.sentences[s]) +
                             " does not reproduce its prior under the chosen weights");
  }

  out.evidence.sentence = sentence_index(problem, spec.evidence.sentence, spec.evidence.line);
  out.evidence.form = spec.evidence.form;
  return out;
}

}  // namespace plogic::cli
