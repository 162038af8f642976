#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plogic/worlds.hpp"

namespace plogic {

inline constexpr double probability_tolerance = 1e-9;

// Prior belief about one source sentence: a point probability or a closed
// interval. A point belief has lo == hi.
struct Belief {
  enum class Kind { point, interval };

  std::size_t sentence = 0;
  Kind kind = Kind::point;
  double lo = 0.0;
  double hi = 0.0;

  // Both throw std::invalid_argument for values outside [0, 1] (beyond
  // probability_tolerance) or lo > hi. Values are clamped into [0, 1].
  static Belief point(std::size_t sentence, double p);
  static Belief interval(std::size_t sentence, double lo, double hi);

  bool is_point() const { return kind == Kind::point; }
  double value() const { return lo; }
};

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<double> coefficients;  // one per world
  Relation relation = Relation::equal;
  double rhs = 0.0;
};

// Bound rows of a sentence over the worlds: `lower` counts worlds where the
// sentence is true, `upper` also counts worlds where it is dc.
struct BoundRows {
  std::vector<double> lower;
  std::vector<double> upper;

  bool tight() const { return lower == upper; }
};

struct TargetBound {
  std::size_t sentence = 0;
  BoundRows rows;
};

// Belief constraints over world weights. Normalization (sum of weights = 1)
// and non-negativity are implicit and always part of the system.
struct ConstraintSystem {
  std::size_t world_count = 0;
  std::vector<LinearConstraint> constraints;
  // Bound rows of the target sentences; objectives, not constraints.
  std::vector<TargetBound> targets;

  LinearConstraint normalization() const;
};

BoundRows bound_rows(const Tableau& t, std::size_t sentence);

// One equality per point belief on a dc-free row; otherwise
//   point p:        lower.W <= p  and  upper.W >= p
//   interval lo,hi: lower.W <= hi and  upper.W >= lo
// Throws std::invalid_argument for beliefs on non-source sentences.
ConstraintSystem build_system(const Tableau& t, const std::vector<Belief>& beliefs);

// (belief rows + target bound rows) x world count. A dc-free target counts
// as a single row.
std::size_t system_size(const ConstraintSystem& s);

// Text dump, one row per line: "c1 c2 ... <rel> rhs", then the
// normalization row, then "target lower|upper c1 c2 ..." lines.
std::string dump_system(const ConstraintSystem& s);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace plogic
