// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/decisions.hpp"
#include "credal/errors.hpp"
#include "credal/lattice.hpp"
#include "credal/modality.hpp"

namespace credal {

/// Per-point surprise values s(i) = posterior mass / reference weight.
/// `tie_tolerance` widens the strict-dominance comparison: point j dominates
/// point i when s(j) > s(i) + tie_tolerance. The default 0 keeps exact ties
/// meaningful on exact-arithmetic fixtures; a positive tolerance absorbs
/// float noise on discretized continuous models.
struct surprise_profile {
  parameter_grid grid;
  std::vector<double> values;
  double tie_tolerance = 0.0;

  bool dominates(std::size_t j, std::size_t i) const {
    return values[j] > values[i] + tie_tolerance;
  }
};

inline surprise_profile surprise(const posterior& post,
                                 double tie_tolerance = 0.0) {
  if (tie_tolerance < 0.0)
    throw config_error("tie tolerance must be >= 0");
  const auto& grid = post.grid();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[i] = post.mass(i) / grid.point(i).reference;
  return {grid, std::move(values), tie_tolerance};
}

/// Same surprise values against a flat reference, ignoring the grid's
/// reference weights.
inline surprise_profile surprise_uniform_reference(const posterior& post,
                                                   double tie_tolerance = 0.0) {
  if (tie_tolerance < 0.0)
    throw config_error("tie tolerance must be >= 0");
  const auto& grid = post.grid();
  const double flat = 1.0 / static_cast<double>(grid.size());
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[i] = post.mass(i) / flat;
  return {grid, std::move(values), tie_tolerance};
}

/// Tangent set of H: the points whose surprise strictly dominates every
/// point of H. The universal quantifier is vacuous on the empty hypothesis,
/// so T(empty) is the whole grid; T(H) and H are always disjoint otherwise.
inline hypothesis tangent_set(const surprise_profile& profile,
                              const hypothesis& h) {
  const std::size_t n = profile.grid.size();
  if (h.universe() != n)
    throw evaluation_error("hypothesis does not live on the profile's grid");
  hypothesis out(n);
  const auto members = h.members();
  for (std::size_t j = 0; j < n; ++j) {
    bool dominates_all = true;
    for (std::size_t i : members) {
      if (!profile.dominates(j, i)) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) out.add(j);
  }
  return out;
}

/// The earlier textbook form: points whose surprise exceeds the supremum of
/// the surprise over H. Undefined on the empty hypothesis; on finite grids
/// it coincides with tangent_set everywhere else.
inline hypothesis tangent_set_star(const surprise_profile& profile,
                                   const hypothesis& h) {
  const std::size_t n = profile.grid.size();
  if (h.universe() != n)
    throw evaluation_error("hypothesis does not live on the profile's grid");
  if (h.is_empty())
    throw empty_set_error("supremum over the empty hypothesis is undefined");
  double sup = -std::numeric_limits<double>::infinity();
  for (std::size_t i : h.members()) sup = std::max(sup, profile.values[i]);
  hypothesis out(n);
  for (std::size_t j = 0; j < n; ++j)
    if (profile.values[j] > sup + profile.tie_tolerance) out.add(j);
  return out;
}

struct e_value {
  double value;        // 1 - posterior mass of the tangent set
  hypothesis hyp;
  hypothesis tangent;
};

/// Epistemic value of H given the data: one minus the posterior probability
/// of the tangent set.
inline e_value ev(const posterior& post, const surprise_profile& profile,
                  const hypothesis& h) {
  hypothesis tangent = tangent_set(profile, h);
  const double value = 1.0 - prob(post, tangent);
  return {value, h, std::move(tangent)};
}

/// The supremum route: ev(H) as the largest singleton e-value over H.
/// Independent of the tangent-set route and exactly equal to it.
inline e_value ev_via_sup(const posterior& post, const surprise_profile& profile,
                          const hypothesis& h) {
  if (h.is_empty())
    throw empty_set_error("supremum over the empty hypothesis is undefined");
  double best = 0.0;
  std::size_t best_point = 0;
  bool first = true;
  for (std::size_t i : h.members()) {
    hypothesis singleton = hypothesis::of(h.universe(), {i});
    const double value = 1.0 - prob(post, tangent_set(profile, singleton));
    if (first || value > best) {
      best = value;
      best_point = i;
      first = false;
    }
  }
  hypothesis arg = hypothesis::of(h.universe(), {best_point});
  return {best, h, tangent_set(profile, arg)};
}

/// The two-valued significance test: accept when ev(H) exceeds the cutoff,
/// reject otherwise.
inline verdict fbst(const posterior& post, const surprise_profile& profile,
                    const hypothesis& h, double cutoff) {
  if (!(cutoff > 0.0 && cutoff < 1.0))
    throw config_error("cutoff must lie in (0, 1)");
  return ev(post, profile, h).value > cutoff ? verdict::accept : verdict::reject;
}

struct gfbst_config {
  double cutoff;  // in (0, 1)

  explicit gfbst_config(double c) : cutoff(c) {
    if (!(cutoff > 0.0 && cutoff < 1.0))
      throw config_error("cutoff must lie in (0, 1)");
  }
};

/// The agnostic significance test: reject when ev(H) <= c, accept when
/// ev(complement of H) <= c, agnostic otherwise. At most one threshold
/// condition can hold because one of the two e-values is always 1.
inline verdict gfbst(const posterior& post, const surprise_profile& profile,
                     const hypothesis& h, const gfbst_config& config) {
  const double ev_h = ev(post, profile, h).value;
  if (ev_h <= config.cutoff) return verdict::reject;
  const double ev_not_h = ev(post, profile, h.complement()).value;
  if (ev_not_h <= config.cutoff) return verdict::accept;
  return verdict::agnostic;
}

/// The region estimator behind the agnostic significance test: the points
/// whose singleton e-value exceeds the cutoff. Never empty, because the
/// surprise mode has e-value 1.
inline hypothesis gfbst_region(const posterior& post,
                               const surprise_profile& profile,
                               const gfbst_config& config) {
  const std::size_t n = profile.grid.size();
  hypothesis region(n);
  for (std::size_t i = 0; i < n; ++i) {
    hypothesis singleton = hypothesis::of(n, {i});
    if (ev(post, profile, singleton).value > config.cutoff) region.add(i);
  }
  if (region.is_empty())
    throw evaluation_error("internal invariant broken: empty e-value region");
  return region;
}

/// Wrap the agnostic significance test as a total test for the checker.
inline agnostic_test make_gfbst_test(const posterior& post,
                                     const surprise_profile& profile,
                                     const gfbst_config& config) {
  std::string description =
      "gfbst (cutoff=" + std::to_string(config.cutoff) + ")";
  return agnostic_test::from_rule(
      post.grid(),
      [post, profile, config](const hypothesis& h) {
        return gfbst(post, profile, h, config);
      },
      std::move(description));
}

struct bridge_counterexample {
  hypothesis hyp;
  double posterior_prob;
  double ev_value;
  verdict gfbst_verdict;
};

struct bridge_result {
  bool pass = true;
  std::optional<bridge_counterexample> counterexample;
};

/// Probability bridge (requires cutoff < 0.5): acceptance forces
/// p(H|x) >= 1-c, and p(H|x) > c forbids rejection. Exhaustive on grids of
/// at most max_enumerable_points points.
inline bridge_result check_ev_prob_bridge(const posterior& post,
                                          const surprise_profile& profile,
                                          const gfbst_config& config) {
  if (!(config.cutoff < 0.5))
    throw precondition_error("the probability bridge needs a cutoff below 0.5");
  bridge_result result;
  for (const hypothesis& h : subset_range(post.grid().size())) {
    const double p = prob(post, h);
    const verdict v = gfbst(post, profile, h, config);
    const bool accept_bound = v != verdict::accept || p >= 1.0 - config.cutoff;
    const bool possibility_bound = !(p > config.cutoff) || v != verdict::reject;
    if (!accept_bound || !possibility_bound) {
      result.pass = false;
      result.counterexample =
          bridge_counterexample{h, p, ev(post, profile, h).value, v};
      return result;
    }
  }
  return result;
}

/// Joint record of the possibilistic and probabilistic modalities of one
/// hypothesis under the paired thresholds upper = 1-c, lower = c.
struct hybrid_record {
  bool gfbst_accept;       // possibilistic necessity
  bool cutoff_accept;      // probabilistic necessity: p > 1-c
  bool cutoff_not_reject;  // probabilistic possibility: p >= c
  bool gfbst_not_reject;   // possibilistic possibility
  double posterior_prob;
  double cutoff;
  verdict gfbst_verdict;
  verdict cutoff_verdict;
};

/// Evaluates the nested-modality record and asserts the provable chain
/// gfbst-accept => p >= 1-c => p > c => gfbst-not-reject, plus the
/// zero-prior corollary (prior mass 0 forces cutoff rejection and forbids
/// gfbst acceptance). Violations indicate an implementation defect and are
/// reported as evaluation errors.
inline hybrid_record hybrid_relations(const posterior& post,
                                      const surprise_profile& profile,
                                      const gfbst_config& config,
                                      const hypothesis& h) {
  if (!(config.cutoff < 0.5))
    throw precondition_error("nested modalities need a cutoff below 0.5");
  const double c = config.cutoff;
  const cutoff_pair cuts{1.0 - c, c};
  const double p = prob(post, h);
  const verdict possibilistic = gfbst(post, profile, h, config);
  const verdict probabilistic = cutoff_decision(p, cuts);

  hybrid_record record{
      possibilistic == verdict::accept,
      probabilistic == verdict::accept,
      probabilistic != verdict::reject,
      possibilistic != verdict::reject,
      p,
      c,
      possibilistic,
      probabilistic,
  };

  if (record.gfbst_accept && !(p >= 1.0 - c))
    throw evaluation_error("bridge violated: acceptance with p < 1-c");
  if (p > c && possibilistic == verdict::reject)
    throw evaluation_error("bridge violated: rejection with p > c");

  double prior_mass = 0.0;
  for (std::size_t i : h.members()) prior_mass += post.grid().point(i).prior;
  if (prior_mass == 0.0) {
    if (probabilistic != verdict::reject)
      throw evaluation_error("zero-prior hypothesis escaped cutoff rejection");
    if (record.gfbst_accept)
      throw evaluation_error("zero-prior hypothesis was accepted");
  }
  return record;
}

} // namespace credal
