#pragma once

#include <cstddef>
#include <vector>

#include "plogic/constraints.hpp"
#include "plogic/worlds.hpp"

namespace plogic {

inline constexpr double pivot_tolerance = 1e-9;
inline constexpr double weight_tolerance = 1e-6;

enum class LpStatus { optimal, infeasible, unbounded };
enum class Direction { minimize, maximize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  std::vector<double> weights;  // empty unless optimal
};

// Optimizes objective.W over the system plus normalization and
// non-negativity with a dense two-phase primal simplex under Bland's rule.
// Weights live on the probability simplex, so an unbounded ray is an
// internal error (std::logic_error).
LpResult solve_lp(const std::vector<double>& objective, const ConstraintSystem& system,
                  Direction direction);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

struct Entailment {
  Interval interval;
  std::vector<double> argmin;  // weights attaining interval.lo
  std::vector<double> argmax;  // weights attaining interval.hi
};

// Minimum of the target's lower row and maximum of its upper row over all
// feasible weights. Throws InfeasibleError when no weights satisfy the
// system.
Entailment entail(const ConstraintSystem& system, const BoundRows& target);
Interval entail_interval(const Tableau& t, const std::vector<Belief>& beliefs,
                         std::size_t target_index);

// [lower.W, upper.W] for one weight vector. Throws std::invalid_argument if
// W is not a probability vector over the tableau's worlds (tolerance 1e-6).
Interval target_interval_at(const Tableau& t, const std::vector<double>& weights,
                            std::size_t target_index);

// Every constraint, normalization and non-negativity hold within 1e-6.
// Throws std::invalid_argument on a width mismatch.
bool feasible(const ConstraintSystem& system, const std::vector<double>& weights);

}  // namespace plogic
