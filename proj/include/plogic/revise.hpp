#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "plogic/constraints.hpp"
#include "plogic/solve.hpp"
#include "plogic/worlds.hpp"

namespace plogic {

// Pr(sentence true | world) for the worlds where the sentence is dc,
// keyed by 0-based world index.
struct Assessment {
  std::size_t sentence = 0;
  std::map<std::size_t, double> values;
};

// Evidence E given as the pair Pr(E|S), Pr(E|!S).
struct Likelihood {
  double given_true = 0.0;
  double given_false = 0.0;
};

// Evidence E given as the posterior Pr(S|E).
struct PosteriorForm {
  double given_evidence = 0.0;
};

struct Evidence {
  std::size_t sentence = 0;
  std::variant<Likelihood, PosteriorForm> form;
};

struct UserPrior {
  std::vector<double> weights;
};
// Average of the weights attaining the first target's lower and upper bound.
struct MidpointPrior {};
// A basic feasible solution from the simplex.
struct VertexPrior {};

using PriorStrategy = std::variant<UserPrior, MidpointPrior, VertexPrior>;

// Throws InfeasibleError if the system (or a user-supplied W) is infeasible.
std::vector<double> select_prior(const ConstraintSystem& system, const PriorStrategy& strategy);

// lower.W + sum of a[j] * W[j].
double assessed_probability(const Tableau& t, const std::vector<double>& weights,
                            const Assessment& a);

// Spreads the part of prior `p` not already carried by worlds where the
// sentence is true uniformly over its dc worlds:
//   c = (p - lower.W) / (dc weight)
// Throws std::invalid_argument when the sentence has no dc cell and
// InconsistencyError when c falls outside [0, 1].
Assessment auto_assess(const Tableau& t, const std::vector<double>& weights,
                       std::size_t sentence, double p);

bool check_assessment(const Tableau& t, const std::vector<double>& weights,
                      std::size_t sentence, double p, const Assessment& a);

// Pr(E|j): Pr(E|S) where S is true, Pr(E|!S) where false, and
// Pr(S|j) Pr(E|S) + (1 - Pr(S|j)) Pr(E|!S) where dc.
std::vector<double> world_conditionals(const Tableau& t, std::size_t sentence,
                                       const Likelihood& evidence, const Assessment& a);

// Posterior-to-prior ratios Pr(S|E)/p and Pr(!S|E)/(1 - p), mixed by
// Pr(S|j) at dc worlds. These stand in for the conditionals in Bayes' rule.
// Throws std::invalid_argument if p is 0 or 1.
std::vector<double> world_ratios(const Tableau& t, std::size_t sentence,
                                 const PosteriorForm& evidence, double p, const Assessment& a);

// posterior[j] = c[j] W[j] / sum c[k] W[k]. Throws InconsistencyError when
// the evidence has zero probability under the prior.
std::vector<double> bayes_update(const std::vector<double>& weights,
                                 const std::vector<double>& conditionals);

// Expected truth of the target under `weights`, with assessed values at its
// dc worlds.
double posterior_target_point(const Tableau& t, const std::vector<double>& weights,
                              std::size_t target, const Assessment& a);

struct RevisionResult {
  std::vector<double> conditionals;  // Pr(E|j), or ratios for posterior-form evidence
  std::vector<double> posterior;
  Interval target_interval;
  std::optional<double> target_point;
};

RevisionResult revise(const Tableau& t, const std::vector<double>& prior, const Evidence& evidence,
                      const Assessment& evidence_assessment, std::size_t target,
                      const std::optional<Assessment>& target_assessment = std::nullopt);

}  // namespace plogic
