#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plogic/cli/problem_file.hpp"
#include "plogic/compress.hpp"

namespace plogic::cli {

// Runs one command. `args` excludes the program name, e.g.
// {"entail", "chain3.plp", "--no-compress"}. Returns 0 on success, 1 for
// infeasible or inconsistent input, 2 for usage and parse errors. Error
// text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Fixed six-decimal rendering; never prints "-0.000000".
std::string format_fixed(double x);

struct TableauChoice {
  Tableau tableau;
  bool from_schema = false;
  CompressionStats stats;
};

// The tableau a command works on. With `compress`, the closed-form
// conjunctive modus ponens tableau is used when requested and the problem
// has that shape; otherwise the enumerated worlds are compressed by search.
TableauChoice choose_tableau(const ProblemSpec& problem, bool compress, bool schema_requested,
                             std::vector<std::string>* warnings = nullptr);

}  // namespace plogic::cli
