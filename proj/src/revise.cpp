#include "plogic/revise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plogic/errors.hpp"

namespace plogic {

namespace {

void require_distribution(const Tableau& t, const std::vector<double>& weights) {
  // Reuses the distribution check; the interval itself is discarded.
  if (t.sentence_count() == 0) throw std::invalid_argument("empty tableau");
  (void)target_interval_at(t, weights, 0);
}

double assessed_value(const Assessment& a, std::size_t world) {
  auto it = a.values.find(world);
  if (it == a.values.end())
    throw std::invalid_argument("no assessment for world " + std::to_string(world + 1));
  return it->second;
}

void require_sentence(const Tableau& t, std::size_t sentence) {
  if (sentence >= t.sentence_count()) throw std::out_of_range("sentence index out of range");
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " outside [0, 1]");
}

}  // namespace

std::vector<double> select_prior(const ConstraintSystem& system, const PriorStrategy& strategy) {
  if (const auto* user = std::get_if<UserPrior>(&strategy)) {
    if (!feasible(system, user->weights))
      throw InfeasibleError("prior solution does not satisfy the belief constraints");
    return user->weights;
  }
  if (std::holds_alternative<MidpointPrior>(strategy)) {
    if (system.targets.empty()) throw std::invalid_argument("midpoint prior needs a target");
    Entailment e = entail(system, system.targets.front().rows);
    std::vector<double> mid(system.world_count);
    for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = 0.5 * (e.argmin[j] + e.argmax[j]);
    return mid;
  }
  LpResult r = solve_lp(std::vector<double>(system.world_count, 0.0), system, Direction::minimize);
  if (r.status != LpStatus::optimal) throw InfeasibleError("prior beliefs are inconsistent");
  return r.weights;
}

double assessed_probability(const Tableau& t, const std::vector<double>& weights,
                            const Assessment& a) {
  BoundRows rows = bound_rows(t, a.sentence);
  double p = dot(rows.lower, weights);
  for (const auto& [world, value] : a.values) p += value * weights.at(world);
  return p;
}

Assessment auto_assess(const Tableau& t, const std::vector<double>& weights,
                       std::size_t sentence, double p) {
  require_sentence(t, sentence);
  require_distribution(t, weights);
  require_probability(p, "prior");

  Assessment a{sentence, {}};
  double settled = 0.0;
  double dc_mass = 0.0;
  for (std::size_t j = 0; j < t.world_count(); ++j) {
    switch (t.worlds[j][sentence]) {
      case Truth::t: settled += weights[j]; break;
      case Truth::dc: dc_mass += weights[j]; a.values[j] = 0.0; break;
      case Truth::f: break;
    }
  }
  if (a.values.empty())
    throw std::invalid_argument("sentence " + to_text(t.sentences[sentence]) +
                                " has no don't-care cells to assess");
  if (dc_mass <= 1e-9) {
    if (std::abs(p - settled) > weight_tolerance)
      throw InconsistencyError("prior of " + to_text(t.sentences[sentence]) +
                               " cannot be matched: its don't-care worlds carry no weight");
    // Any value is consistent; none is informative.
    for (auto& [world, value] : a.values) value = 0.5;
    return a;
  }
  double c = (p - settled) / dc_mass;
  if (c < -1e-9 || c > 1.0 + 1e-9)
    throw InconsistencyError("prior of " + to_text(t.sentences[sentence]) +
                             " is not reachable from the chosen weights");
  c = std::clamp(c, 0.0, 1.0);
  for (auto& [world, value] : a.values) value = c;
  return a;
}

bool check_assessment(const Tableau& t, const std::vector<double>& weights,
                      std::size_t sentence, double p, const Assessment& a) {
  require_sentence(t, sentence);
  if (a.sentence != sentence || weights.size() != t.world_count()) return false;
  for (const auto& [world, value] : a.values) {
    if (world >= t.world_count() || t.worlds[world][sentence] != Truth::dc) return false;
    if (!(value >= 0.0 && value <= 1.0)) return false;
  }
  return std::abs(assessed_probability(t, weights, a) - p) <= weight_tolerance;
}

std::vector<double> world_conditionals(const Tableau& t, std::size_t sentence,
                                       const Likelihood& evidence, const Assessment& a) {
  require_sentence(t, sentence);
  require_probability(evidence.given_true, "Pr(E|S)");
  require_probability(evidence.given_false, "Pr(E|!S)");
  std::vector<double> out;
  out.reserve(t.world_count());
  for (std::size_t j = 0; j < t.world_count(); ++j) {
    switch (t.worlds[j][sentence]) {
      case Truth::t: out.push_back(evidence.given_true); break;
      case Truth::f: out.push_back(evidence.given_false); break;
      case Truth::dc: {
        double s = assessed_value(a, j);
        out.push_back(s * evidence.given_true + (1.0 - s) * evidence.given_false);
        break;
      }
    }
  }
  return out;
}

std::vector<double> world_ratios(const Tableau& t, std::size_t sentence,
                                 const PosteriorForm& evidence, double p, const Assessment& a) {
  require_sentence(t, sentence);
  require_probability(evidence.given_evidence, "Pr(S|E)");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("posterior-form evidence needs a prior strictly inside (0, 1)");
  const double r_true = evidence.given_evidence / p;
  const double r_false = (1.0 - evidence.given_evidence) / (1.0 - p);
  std::vector<double> out;
  out.reserve(t.world_count());
  for (std::size_t j = 0; j < t.world_count(); ++j) {
    switch (t.worlds[j][sentence]) {
      case Truth::t: out.push_back(r_true); break;
      case Truth::f: out.push_back(r_false); break;
      case Truth::dc: {
        double s = assessed_value(a, j);
        out.push_back(s * r_true + (1.0 - s) * r_false);
        break;
      }
    }
  }
  return out;
}

std::vector<double> bayes_update(const std::vector<double>& weights,
                                 const std::vector<double>& conditionals) {
  if (weights.size() != conditionals.size())
    throw std::invalid_argument("conditional vector length does not match world count");
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (conditionals[j] < 0.0) throw std::invalid_argument("negative conditional");
    total += conditionals[j] * weights[j];
  }
  if (!(total > 1e-12)) throw InconsistencyError("evidence has zero probability under the prior");
  std::vector<double> posterior(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j)
    posterior[j] = conditionals[j] * weights[j] / total;
  return posterior;
}

double posterior_target_point(const Tableau& t, const std::vector<double>& weights,
                              std::size_t target, const Assessment& a) {
  require_sentence(t, target);
  if (weights.size() != t.world_count())
    throw std::invalid_argument("weight vector length does not match world count");
  double p = 0.0;
  for (std::size_t j = 0; j < t.world_count(); ++j) {
    switch (t.worlds[j][target]) {
      case Truth::t: p += weights[j]; break;
      case Truth::f: break;
      case Truth::dc: p += assessed_value(a, j) * weights[j]; break;
    }
  }
  return p;
}

RevisionResult revise(const Tableau& t, const std::vector<double>& prior, const Evidence& evidence,
                      const Assessment& evidence_assessment, std::size_t target,
                      const std::optional<Assessment>& target_assessment) {
  require_distribution(t, prior);
  RevisionResult result;
  if (const auto* lk = std::get_if<Likelihood>(&evidence.form)) {
    result.conditionals = world_conditionals(t, evidence.sentence, *lk, evidence_assessment);
  } else {
    Assessment a = evidence_assessment;
    a.sentence = evidence.sentence;
    double p = assessed_probability(t, prior, a);
    result.conditionals = world_ratios(t, evidence.sentence, std::get<PosteriorForm>(evidence.form),
                                       p, evidence_assessment);
  }
  result.posterior = bayes_update(prior, result.conditionals);
  result.target_interval = target_interval_at(t, result.posterior, target);
  if (target_assessment)
    result.target_point = posterior_target_point(t, result.posterior, target, *target_assessment);
  return result;
}

}  // namespace plogic
