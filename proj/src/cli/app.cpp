#include "plogic/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "plogic/cli/evidence_file.hpp"
#include "plogic/constraints.hpp"
#include "plogic/errors.hpp"
#include "plogic/revise.hpp"
#include "plogic/solve.hpp"

namespace plogic::cli {

namespace {

// File access problems are usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemSpec load_problem(const std::string& path) {
  try {
    return parse_problem(read_file(path));
  } catch (const SyntaxError& e) {
    throw SyntaxError(path + ": " + e.what(), e.position());
  }
}

std::string format_vector(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_fixed(v[i]);
  }
  return out;
}

std::string format_interval(const Interval& i) {
  return "[" + format_fixed(i.lo) + ", " + format_fixed(i.hi) + "]";
}

// Sentence list and target of the conjunctive modus ponens schema, if the
// problem has exactly that shape.
std::optional<Tableau> schema_tableau(const ProblemSpec& problem) {
  const std::size_t n = problem.source_count;
  if (n < 2 || problem.sentences.size() != n + 1) return std::nullopt;
  std::vector<std::string> antecedents;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!problem.sentences[i].is_atom()) return std::nullopt;
    antecedents.push_back(problem.sentences[i].name());
  }
  const Sentence& target = problem.sentences[n];
  if (!target.is_atom()) return std::nullopt;
  Tableau t = conjunctive_mp_tableau(antecedents, target.name());
  if (!(t.sentences == problem.sentences)) return std::nullopt;
  // Repeated atoms would make the closed form wrong.
  if (AtomTable(t.sentences).size() != n) return std::nullopt;
  return t;
}

void emit_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

struct Options {
  std::string problem;
  std::string evidence;
  std::string schema;
  bool no_compress = false;
  bool dump_lp = false;
};

int cmd_worlds(const Options& o, std::ostream& out) {
  ProblemSpec problem = load_problem(o.problem);
  Tableau t = choose_tableau(problem, false, false).tableau;
  out << render_tableau(t);
  out << "worlds " << t.world_count() << '\n';
  return 0;
}

int cmd_compress(const Options& o, std::ostream& out, std::ostream& err) {
  ProblemSpec problem = load_problem(o.problem);
  std::vector<std::string> warnings;
  TableauChoice original = choose_tableau(problem, false, false);
  TableauChoice c = choose_tableau(problem, true, !o.schema.empty(), &warnings);
  emit_warnings(warnings, err);
  out << render_tableau(c.tableau);
  out << "worlds-before " << original.tableau.world_count() << '\n';
  out << "worlds-after " << c.tableau.world_count() << '\n';
  if (c.from_schema) {
    out << "method schema conj-mp\n";
  } else {
    out << "method search\n";
    out << "merges " << c.stats.merges << '\n';
    out << "passes " << c.stats.passes << '\n';
  }
  return 0;
}

int cmd_entail(const Options& o, std::ostream& out, std::ostream& err) {
  ProblemSpec problem = load_problem(o.problem);
  std::vector<std::string> warnings;
  TableauChoice c = choose_tableau(problem, !o.no_compress, !o.schema.empty(), &warnings);
  emit_warnings(warnings, err);
  ConstraintSystem system = build_system(c.tableau, problem.beliefs);
  if (o.dump_lp) out << dump_system(system);
  Entailment e = entail(system, bound_rows(c.tableau, problem.target_index()));
  out << format_interval(e.interval) << '\n';
  return 0;
}

int cmd_revise(const Options& o, std::ostream& out, std::ostream& err) {
  ProblemSpec problem = load_problem(o.problem);
  EvidenceSpec evidence_spec = [&] {
    try {
      return parse_evidence(read_file(o.evidence));
    } catch (const SyntaxError& e) {
      throw SyntaxError(o.evidence + ": " + e.what(), e.position());
    }
  }();
  std::vector<std::string> warnings;
  TableauChoice c = choose_tableau(problem, true, !o.schema.empty(), &warnings);
  const Tableau& t = c.tableau;
  out << render_tableau(t);

  ResolvedEvidence ev = resolve_evidence(evidence_spec, problem, t);
  warnings.insert(warnings.end(), ev.warnings.begin(), ev.warnings.end());
  emit_warnings(warnings, err);

  const std::size_t target = problem.target_index();
  out << "prior " << format_vector(ev.prior) << '\n';
  out << "prior-interval " << format_interval(target_interval_at(t, ev.prior, target)) << '\n';
  for (const auto& [s, a] : ev.assessments)
    for (const auto& [world, value] : a.values)
      out << "assessment " << to_text(t.sentences[s]) << " world " << world + 1 << ' '
          << format_fixed(value) << '\n';

  Assessment evidence_assessment{ev.evidence.sentence, {}};
  if (auto it = ev.assessments.find(ev.evidence.sentence); it != ev.assessments.end())
    evidence_assessment = it->second;
  std::optional<Assessment> target_assessment;
  if (auto it = ev.assessments.find(target); it != ev.assessments.end())
    target_assessment = it->second;

  RevisionResult r = revise(t, ev.prior, ev.evidence, evidence_assessment, target, target_assessment);
  out << (std::holds_alternative<Likelihood>(ev.evidence.form) ? "conditionals " : "ratios ")
      << format_vector(r.conditionals) << '\n';
  out << "posterior " << format_vector(r.posterior) << '\n';
  out << "posterior-interval " << format_interval(r.target_interval) << '\n';
  if (r.target_point) out << "posterior-point " << format_fixed(*r.target_point) << '\n';
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  ProblemSpec problem = load_problem(o.problem);
  std::vector<std::string> warnings;
  TableauChoice plain = choose_tableau(problem, false, false);
  TableauChoice packed = choose_tableau(problem, true, !o.schema.empty(), &warnings);
  emit_warnings(warnings, err);
  const std::size_t size_plain = system_size(build_system(plain.tableau, problem.beliefs));
  const std::size_t size_packed = system_size(build_system(packed.tableau, problem.beliefs));
  out << "worlds-uncompressed " << plain.tableau.world_count() << '\n';
  out << "worlds-compressed " << packed.tableau.world_count() << '\n';
  out << "system-size-uncompressed " << size_plain << '\n';
  out << "system-size-compressed " << size_packed << '\n';
  out << "compression-ratio "
      << format_fixed(size_plain == 0 ? 1.0 : static_cast<double>(size_packed) / size_plain)
      << '\n';
  return 0;
}

}  // namespace

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

TableauChoice choose_tableau(const ProblemSpec& problem, bool compress, bool schema_requested,
                             std::vector<std::string>* warnings) {
  TableauChoice choice;
  if (compress && (schema_requested || problem.conj_mp_schema)) {
    if (auto t = schema_tableau(problem)) {
      choice.tableau = std::move(*t);
      choice.from_schema = true;
      choice.stats.worlds_after = choice.tableau.world_count();
      return choice;
    }
    if (warnings)
      warnings->push_back("problem does not match the conj-mp schema; compressing by search");
  }
  choice.tableau = enumerate_worlds(problem.sentences, problem.source_count, problem.atom_cap);
  if (compress) choice.tableau = compress_tableau(choice.tableau, &choice.stats);
  return choice;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic logic entailment over compressed possible worlds", "plp"};
  app.require_subcommand(1);
  Options o;

  auto* worlds = app.add_subcommand("worlds", "Print the two-valued possible worlds");
  worlds->add_option("problem", o.problem, "Problem file (.plp)")->required();

  auto add_schema = [&](CLI::App* cmd) {
    cmd->add_option("--schema", o.schema, "Use a closed-form tableau when the problem fits")
        ->check(CLI::IsMember({"conj-mp"}));
  };

  auto* compress = app.add_subcommand("compress", "Print the compressed tableau");
  compress->add_option("problem", o.problem, "Problem file (.plp)")->required();
  add_schema(compress);

  auto* entail_cmd = app.add_subcommand("entail", "Print the target's probability interval");
  entail_cmd->add_option("problem", o.problem, "Problem file (.plp)")->required();
  entail_cmd->add_flag("--no-compress", o.no_compress, "Solve over the two-valued worlds");
  entail_cmd->add_flag("--dump-lp", o.dump_lp, "Print the constraint system first");
  add_schema(entail_cmd);

  auto* revise_cmd = app.add_subcommand("revise", "Revise a representative prior on evidence");
  revise_cmd->add_option("problem", o.problem, "Problem file (.plp)")->required();
  revise_cmd->add_option("--evidence", o.evidence, "Evidence file (.plev)")->required();
  add_schema(revise_cmd);

  auto* stats = app.add_subcommand("stats", "Print world counts and system sizes");
  stats->add_option("problem", o.problem, "Problem file (.plp)")->required();
  add_schema(stats);

  std::vector<std::string> argv_storage{"plp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (worlds->parsed()) return cmd_worlds(o, out);
    if (compress->parsed()) return cmd_compress(o, out, err);
    if (entail_cmd->parsed()) return cmd_entail(o, out, err);
    if (revise_cmd->parsed()) return cmd_revise(o, out, err);
    if (stats->parsed()) return cmd_stats(o, out, err);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace plogic::cli
