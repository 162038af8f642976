#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plogic/errors.hpp"
#include "plogic/sentence.hpp"

namespace plogic::cli::detail {

struct Token {
  std::string text;
  bool quoted = false;
};

[[noreturn]] inline void line_error(std::size_t line, const std::string& message) {
  throw SyntaxError("line " + std::to_string(line) + ": " + message, line);
}

// Splits on whitespace; "double quoted" runs form one token. A '#' outside
// quotes ends the line.
inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    if (space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    if (line[i] == '"') {
      std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) line_error(line_no, "unterminated quote");
      out.push_back({std::string(line.substr(i + 1, close - i - 1)), true});
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !space(line[j]) && line[j] != '#') ++j;
    out.push_back({std::string(line.substr(i, j - i)), false});
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline double parse_number(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    line_error(line, "expected a number but found '" + std::string(s) + "'");
  return v;
}

inline double parse_probability(std::string_view s, std::size_t line) {
  double v = parse_number(s, line);
  if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
    line_error(line, "probability " + std::string(s) + " outside [0, 1]");
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

inline Sentence parse_formula(const Token& token, std::size_t line) {
  try {
    return parse(token.text);
  } catch (const SyntaxError& e) {
    line_error(line, "in formula '" + token.text + "': " + e.what());
  }
}

inline std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    line_error(line, "expected a non-negative integer but found '" + std::string(s) + "'");
  return v;
}

}  // namespace plogic::cli::detail
