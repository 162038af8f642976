#include "plogic/cli/problem_file.hpp"

#include <optional>
#include <regex>

#include "line_tokens.hpp"

namespace plogic::cli {

using detail::line_error;

const Belief* ProblemSpec::belief_for(std::size_t sentence) const {
  for (const auto& b : beliefs)
    if (b.sentence == sentence) return &b;
  return nullptr;
}

std::optional<std::size_t> ProblemSpec::find(const Sentence& s) const {
  for (std::size_t i = 0; i < sentences.size(); ++i)
    if (sentences[i] == s) return i;
  return std::nullopt;
}

ProblemSpec parse_problem(std::string_view text) {
  static const std::regex point_prior(R"(^prior\s+(\S+)$)");
  static const std::regex interval_prior(R"(^prior\s+in\s*\[\s*([^,\s]+)\s*,\s*([^\]\s]+)\s*\]$)");

  ProblemSpec spec;
  std::optional<Sentence> target;
  std::size_t target_line = 0;
  auto lines = detail::split_lines(text);

  auto check_duplicate = [&](const Sentence& s, std::size_t line) {
    if (spec.find(s) || (target && *target == s))
      line_error(line, "duplicate sentence " + to_text(s));
  };

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line = n + 1;
    auto tokens = detail::tokenize(lines[n], line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0].text;

    if (keyword == "sentence") {
      if (tokens.size() < 2) line_error(line, "sentence needs a formula");
      Sentence s = detail::parse_formula(tokens[1], line);
      check_duplicate(s, line);
      const std::size_t index = spec.sentences.size();
      spec.sentences.push_back(s);
      if (tokens.size() > 2) {
        std::string rest;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          if (tokens[i].quoted) line_error(line, "unexpected quoted text after formula");
          if (i > 2) rest += ' ';
          rest += tokens[i].text;
        }
        std::smatch m;
        if (std::regex_match(rest, m, interval_prior)) {
          double lo = detail::parse_probability(m[1].str(), line);
          double hi = detail::parse_probability(m[2].str(), line);
          if (lo > hi) line_error(line, "interval prior has lower end above upper end");
          spec.beliefs.push_back(Belief::interval(index, lo, hi));
        } else if (std::regex_match(rest, m, point_prior)) {
          spec.beliefs.push_back(Belief::point(index, detail::parse_probability(m[1].str(), line)));
        } else {
          line_error(line, "expected 'prior <p>' or 'prior in [<lo>, <hi>]' after formula");
        }
      }
    } else if (keyword == "target") {
      if (tokens.size() != 2) line_error(line, "target takes exactly one formula");
      if (target) line_error(line, "duplicate target (first declared on line " +
                                       std::to_string(target_line) + ")");
      Sentence s = detail::parse_formula(tokens[1], line);
      check_duplicate(s, line);
      target = s;
      target_line = line;
    } else if (keyword == "option") {
      if (tokens.size() == 3 && tokens[1].text == "atoms-cap") {
        spec.atom_cap = detail::parse_count(tokens[2].text, line);
      } else if (tokens.size() == 3 && tokens[1].text == "schema" && tokens[2].text == "conj-mp") {
        spec.conj_mp_schema = true;
      } else {
        line_error(line, "unknown option");
      }
    } else {
      line_error(line, "unknown declaration '" + keyword + "'");
    }
  }

  if (!target) line_error(lines.size(), "missing target declaration");
  if (spec.sentences.empty()) line_error(lines.size(), "no source sentences declared");
  spec.source_count = spec.sentences.size();
  spec.sentences.push_back(*target);
  return spec;
}

}  // namespace plogic::cli
