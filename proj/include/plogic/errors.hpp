#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plogic {

// Malformed formula, problem file or evidence file.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The belief constraints admit no weight vector.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that are individually well-formed but contradict each other
// (an assessment that cannot match a prior, impossible evidence, ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plogic
