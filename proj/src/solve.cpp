#include "plogic/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "plogic/errors.hpp"

namespace plogic {

namespace {

// Standard-form tableau: rows hold B^-1 [A | b], `cost` holds reduced costs.
class SimplexTableau {
 public:
  SimplexTableau(const ConstraintSystem& system) : structural_(system.world_count) {
    std::vector<LinearConstraint> rows = system.constraints;
    rows.push_back(system.normalization());
    for (auto& r : rows) {
      if (r.coefficients.size() != structural_)
        throw std::invalid_argument("constraint width does not match world count");
      if (r.rhs < 0.0) {
        for (auto& c : r.coefficients) c = -c;
        r.rhs = -r.rhs;
        if (r.relation == Relation::less_equal)
          r.relation = Relation::greater_equal;
        else if (r.relation == Relation::greater_equal)
          r.relation = Relation::less_equal;
      }
    }

    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& r : rows) {
      if (r.relation != Relation::equal) ++slacks;
      if (r.relation != Relation::less_equal) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    columns_ = first_artificial_ + artificials;

    std::size_t next_slack = structural_;
    std::size_t next_artificial = first_artificial_;
    for (const auto& r : rows) {
      std::vector<double> line(columns_ + 1, 0.0);
      std::copy(r.coefficients.begin(), r.coefficients.end(), line.begin());
      line[columns_] = r.rhs;
      switch (r.relation) {
        case Relation::less_equal:
          line[next_slack] = 1.0;
          basis_.push_back(next_slack++);
          break;
        case Relation::greater_equal:
          line[next_slack++] = -1.0;
          line[next_artificial] = 1.0;
          basis_.push_back(next_artificial++);
          break;
        case Relation::equal:
          line[next_artificial] = 1.0;
          basis_.push_back(next_artificial++);
          break;
      }
      rows_.push_back(std::move(line));
    }
  }

  // Phase 1. Returns false when the artificial mass cannot be driven to 0.
  bool find_feasible_basis() {
    std::vector<double> cost(columns_, 0.0);
    for (std::size_t j = first_artificial_; j < columns_; ++j) cost[j] = 1.0;
    allowed_ = columns_;
    if (!optimize(cost)) throw std::logic_error("phase 1 reported an unbounded ray");
    if (objective_value(cost) > pivot_tolerance) return false;
    drive_out_artificials();
    allowed_ = first_artificial_;
    return true;
  }

  // Phase 2 (minimization). Returns false on an unbounded ray.
  bool minimize(const std::vector<double>& structural_cost) {
    std::vector<double> cost(columns_, 0.0);
    std::copy(structural_cost.begin(), structural_cost.end(), cost.begin());
    return optimize(cost);
  }

  std::vector<double> structural_solution() const {
    std::vector<double> x(structural_, 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < structural_) x[basis_[i]] = std::max(0.0, rows_[i][columns_]);
    return x;
  }

 private:
  double objective_value(const std::vector<double>& cost) const {
    double z = 0.0;
    for (std::size_t i = 0; i < rows_.size(); ++i) z += cost[basis_[i]] * rows_[i][columns_];
    return z;
  }

  std::vector<double> reduced_costs(const std::vector<double>& cost) const {
    std::vector<double> r(cost.begin(), cost.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < columns_; ++j) r[j] -= cb * rows_[i][j];
    }
    return r;
  }

  bool optimize(const std::vector<double>& cost) {
    std::vector<double> reduced = reduced_costs(cost);
    const std::size_t limit = 1000 * (columns_ + rows_.size()) + 1000;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      // Bland: lowest-index improving column enters.
      std::size_t entering = allowed_;
      for (std::size_t j = 0; j < allowed_; ++j) {
        if (reduced[j] < -pivot_tolerance) {
          entering = j;
          break;
        }
      }
      if (entering == allowed_) return true;

      // Min-ratio row; ties go to the lowest-index basic variable.
      std::size_t leaving = rows_.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        double a = rows_[i][entering];
        if (a <= pivot_tolerance) continue;
        double ratio = rows_[i][columns_] / a;
        if (leaving == rows_.size() || ratio < best - pivot_tolerance) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + pivot_tolerance && basis_[i] < basis_[leaving]) {
          best = std::min(best, ratio);
          leaving = i;
        }
      }
      if (leaving == rows_.size()) return false;

      pivot(leaving, entering);
      double factor = reduced[entering];
      for (std::size_t j = 0; j < columns_; ++j) reduced[j] -= factor * rows_[leaving][j];
      reduced[entering] = 0.0;
    }
    throw std::logic_error("simplex iteration limit reached");
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& p = rows_[row];
    const double scale = p[col];
    for (auto& v : p) v /= scale;
    p[col] = 1.0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      double factor = rows_[i][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) rows_[i][j] -= factor * p[j];
      rows_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  // Artificials left basic at level zero are pivoted out on any usable
  // column; rows with no usable column are redundant and dropped.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (std::abs(rows_[i][j]) > pivot_tolerance) {
          col = j;
          break;
        }
      }
      if (col < first_artificial_) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::size_t allowed_ = 0;  // columns eligible to enter
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> basis_;
};

bool probability_vector(const std::vector<double>& w) {
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= -weight_tolerance)) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= weight_tolerance;
}

}  // namespace

LpResult solve_lp(const std::vector<double>& objective, const ConstraintSystem& system,
                  Direction direction) {
  if (objective.size() != system.world_count)
    throw std::invalid_argument("objective width does not match world count");
  SimplexTableau tableau(system);
  if (!tableau.find_feasible_basis()) return {LpStatus::infeasible, 0.0, {}};

  std::vector<double> cost = objective;
  if (direction == Direction::maximize)
    for (auto& c : cost) c = -c;
  if (!tableau.minimize(cost))
    throw std::logic_error("unbounded linear program over the probability simplex");

  LpResult result{LpStatus::optimal, 0.0, tableau.structural_solution()};
  result.objective = dot(objective, result.weights);
  return result;
}

Entailment entail(const ConstraintSystem& system, const BoundRows& target) {
  LpResult low = solve_lp(target.lower, system, Direction::minimize);
  if (low.status != LpStatus::optimal) throw InfeasibleError("prior beliefs are inconsistent");
  LpResult high = solve_lp(target.upper, system, Direction::maximize);
  if (high.status != LpStatus::optimal) throw InfeasibleError("prior beliefs are inconsistent");
  double lo = std::clamp(low.objective, 0.0, 1.0);
  double hi = std::clamp(high.objective, 0.0, 1.0);
  return {{lo, std::max(lo, hi)}, std::move(low.weights), std::move(high.weights)};
}

Interval entail_interval(const Tableau& t, const std::vector<Belief>& beliefs,
                         std::size_t target_index) {
  return entail(build_system(t, beliefs), bound_rows(t, target_index)).interval;
}

Interval target_interval_at(const Tableau& t, const std::vector<double>& weights,
                            std::size_t target_index) {
  if (weights.size() != t.world_count())
    throw std::invalid_argument("weight vector length does not match world count");
  if (!probability_vector(weights))
    throw std::invalid_argument("weights are not a probability distribution");
  BoundRows rows = bound_rows(t, target_index);
  return {dot(rows.lower, weights), dot(rows.upper, weights)};
}

bool feasible(const ConstraintSystem& system, const std::vector<double>& weights) {
  if (weights.size() != system.world_count)
    throw std::invalid_argument("weight vector length does not match world count");
  if (!probability_vector(weights)) return false;
  for (const auto& c : system.constraints) {
    double lhs = dot(c.coefficients, weights);
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs + weight_tolerance) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs - weight_tolerance) return false;
        break;
      case Relation::equal:
        if (std::abs(lhs - c.rhs) > weight_tolerance) return false;
        break;
    }
  }
  return true;
}

}  // namespace plogic
