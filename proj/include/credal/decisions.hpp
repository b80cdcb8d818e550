// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/errors.hpp"
#include "credal/lattice.hpp"
#include "credal/modality.hpp"

namespace credal {

/// Three-action loss: accepting a false hypothesis costs 1, rejecting a true
/// one costs `type1_loss`, staying agnostic always costs `agnostic_loss`.
/// Requires type1_loss > 0 and 0 < agnostic_loss < min(type1_loss, 1).
struct loss_spec {
  double type1_loss;     // penalty for rejecting a true hypothesis
  double agnostic_loss;  // flat penalty for leaving it undecided

  loss_spec(double type1, double agnostic)
      : type1_loss(type1), agnostic_loss(agnostic) {
    if (!(type1_loss > 0.0) || !std::isfinite(type1_loss))
      throw config_error("type-1 loss must be finite and > 0");
    if (!(agnostic_loss > 0.0) ||
        !(agnostic_loss < std::min(type1_loss, 1.0)))
      throw config_error("agnostic loss must satisfy 0 < b < min(a, 1)");
  }
};

/// Posterior-probability thresholds: accept above `upper`, reject below
/// `lower`, agnostic in between (boundaries included in the agnostic band).
struct cutoff_pair {
  double upper;  // accept when p > upper
  double lower;  // reject when p < lower

  cutoff_pair(double upper_, double lower_) : upper(upper_), lower(lower_) {
    if (!(upper > 0.0 && upper <= 1.0))
      throw config_error("upper cutoff must lie in (0, 1]");
    if (!(lower >= 0.0 && lower < 1.0))
      throw config_error("lower cutoff must lie in [0, 1)");
    if (lower > upper)
      throw config_error("lower cutoff must not exceed the upper cutoff");
  }
};

/// The loss-optimal thresholds: upper = max((1+a)^-1, 1-b),
/// lower = min((1+a)^-1, b/a).
inline cutoff_pair cutoffs_from_loss(const loss_spec& loss) {
  const double even_odds = 1.0 / (1.0 + loss.type1_loss);
  const double upper = std::max(even_odds, 1.0 - loss.agnostic_loss);
  const double lower = std::min(even_odds, loss.agnostic_loss / loss.type1_loss);
  return {upper, lower};
}

struct expected_losses {
  double accept;    // 1 * (1 - p)
  double agnostic;  // b
  double reject;    // a * p
};

/// Brute-force expected-loss minimizer over the three actions. Ties are
/// resolved by the preference order agnostic > accept > reject (most
/// cautious first). Serves as the independent oracle for the cutoff rule.
inline verdict bayes_optimal_decision(double p, const loss_spec& loss,
                                      expected_losses* losses_out = nullptr) {
  if (!(p >= 0.0 && p <= 1.0))
    throw evaluation_error("probability must lie in [0, 1]");
  const expected_losses el{1.0 * (1.0 - p), loss.agnostic_loss,
                           loss.type1_loss * p};
  if (losses_out) *losses_out = el;
  const double best = std::min({el.accept, el.agnostic, el.reject});
  if (el.agnostic == best) return verdict::agnostic;
  if (el.accept == best) return verdict::accept;
  return verdict::reject;
}

/// The posterior cutoff rule: strict comparisons, so boundary probabilities
/// fall into the agnostic band.
inline verdict cutoff_decision(double p, const cutoff_pair& cuts) {
  if (p > cuts.upper) return verdict::accept;
  if (p < cuts.lower) return verdict::reject;
  return verdict::agnostic;
}

inline verdict cutoff_test(const posterior& post, const hypothesis& h,
                           const cutoff_pair& cuts) {
  return cutoff_decision(prob(post, h), cuts);
}

/// Wrap the cutoff rule as a total test over the posterior's grid, for use
/// with the consistency checker.
inline agnostic_test build_cutoff_test(const posterior& post,
                                       const cutoff_pair& cuts) {
  std::string description = "cutoff test (upper=" + std::to_string(cuts.upper) +
                            ", lower=" + std::to_string(cuts.lower) + ")";
  return agnostic_test::from_rule(
      post.grid(),
      [post, cuts](const hypothesis& h) { return cutoff_test(post, h, cuts); },
      std::move(description));
}

/// A uniform posterior together with the singleton partition of its grid:
/// every part is rejected by the cutoff rule while the whole space is
/// accepted, so the pair breaks union consonance.
struct consonance_witness {
  posterior post;
  std::vector<hypothesis> partition;
  cutoff_pair cuts;
};

inline consonance_witness consonance_failure_witness(const cutoff_pair& cuts,
                                                     std::size_t parts) {
  if (cuts.lower <= 0.0)
    throw no_witness_error(
        "a zero lower cutoff rejects nothing; no sub-threshold partition exists");
  if (static_cast<double>(parts) * cuts.lower <= 1.0)
    throw precondition_error(
        "each part must fall strictly below the lower cutoff: need n > 1/lower");
  if (cuts.upper >= 1.0)
    throw precondition_error(
        "the whole space is only accepted when the upper cutoff is below 1");

  std::vector<std::string> ids;
  ids.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i)
    ids.push_back("theta" + std::to_string(i + 1));
  parameter_grid grid = parameter_grid::uniform(std::move(ids));

  const double share = 1.0 / static_cast<double>(parts);
  std::vector<double> masses(parts, share);
  // Keep the masses summing to 1 exactly in spite of 1/n rounding.
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < parts; ++i) partial += masses[i];
  masses[parts - 1] = 1.0 - partial;

  posterior post = posterior::from_masses(grid, std::move(masses), "uniform");

  std::vector<hypothesis> partition;
  partition.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i)
    partition.push_back(hypothesis::of(parts, {i}));

  // The construction must reject every part and accept the whole space.
  for (const auto& part : partition)
    if (cutoff_test(post, part, cuts) != verdict::reject)
      throw evaluation_error("witness construction failed to reject a part");
  if (cutoff_test(post, hypothesis::full_set(parts), cuts) != verdict::accept)
    throw evaluation_error("witness construction failed to accept the whole space");

  return {std::move(post), std::move(partition), cuts};
}

} // namespace credal
