#include "plogic/constraints.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace plogic {

namespace {

double checked_probability(double p) {
  if (!(p >= -probability_tolerance && p <= 1.0 + probability_tolerance))
    throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
  return std::clamp(p, 0.0, 1.0);
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

std::string format_row(const std::vector<double>& coeffs) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%g", coeffs[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

}  // namespace

Belief Belief::point(std::size_t sentence, double p) {
  double v = checked_probability(p);
  return Belief{sentence, Kind::point, v, v};
}

Belief Belief::interval(std::size_t sentence, double lo, double hi) {
  double l = checked_probability(lo);
  double h = checked_probability(hi);
  if (l > h + probability_tolerance) throw std::invalid_argument("interval belief has lo > hi");
  return Belief{sentence, Kind::interval, std::min(l, h), h};
}

LinearConstraint ConstraintSystem::normalization() const {
  return {std::vector<double>(world_count, 1.0), Relation::equal, 1.0};
}

BoundRows bound_rows(const Tableau& t, std::size_t sentence) {
  if (sentence >= t.sentence_count()) throw std::out_of_range("sentence index out of range");
  BoundRows rows;
  rows.lower.reserve(t.world_count());
  rows.upper.reserve(t.world_count());
  for (const auto& w : t.worlds) {
    Truth v = w[sentence];
    rows.lower.push_back(v == Truth::t ? 1.0 : 0.0);
    rows.upper.push_back(v == Truth::f ? 0.0 : 1.0);
  }
  return rows;
}

ConstraintSystem build_system(const Tableau& t, const std::vector<Belief>& beliefs) {
  ConstraintSystem system;
  system.world_count = t.world_count();
  for (const auto& b : beliefs) {
    if (b.sentence >= t.source_count)
      throw std::invalid_argument("belief on sentence " + std::to_string(b.sentence) +
                                  ", which is not a source");
    if (!(b.lo >= 0.0 && b.lo <= b.hi && b.hi <= 1.0))
      throw std::invalid_argument("malformed belief");
    BoundRows rows = bound_rows(t, b.sentence);
    if (b.is_point() && rows.tight()) {
      system.constraints.push_back({rows.lower, Relation::equal, b.lo});
    } else {
      system.constraints.push_back({rows.lower, Relation::less_equal, b.hi});
      system.constraints.push_back({std::move(rows.upper), Relation::greater_equal, b.lo});
    }
  }
  for (std::size_t s = t.source_count; s < t.sentence_count(); ++s)
    system.targets.push_back({s, bound_rows(t, s)});
  return system;
}

std::size_t system_size(const ConstraintSystem& s) {
  std::size_t rows = s.constraints.size();
  for (const auto& target : s.targets) rows += target.rows.tight() ? 1 : 2;
  return rows * s.world_count;
}

std::string dump_system(const ConstraintSystem& s) {
  std::string out;
  char buf[64];
  auto line = [&](const LinearConstraint& c) {
    std::snprintf(buf, sizeof buf, " %s %.6f\n", relation_text(c.relation), c.rhs);
    out += format_row(c.coefficients) + buf;
  };
  for (const auto& c : s.constraints) line(c);
  line(s.normalization());
  for (const auto& target : s.targets) {
    out += "target lower " + format_row(target.rows.lower) + "\n";
    out += "target upper " + format_row(target.rows.upper) + "\n";
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace plogic
