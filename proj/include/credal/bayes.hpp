// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/grid.hpp"
#include "credal/hypothesis.hpp"

namespace credal {

/// A discrete Bayesian model: a grid of parameter points plus a likelihood
/// kernel. Observations are opaque string keys; the kernel maps
/// (point index, observation) to a non-negative density value.
class discrete_model {
public:
  using likelihood_fn = std::function<double(std::size_t, const std::string&)>;

  discrete_model(parameter_grid grid, likelihood_fn likelihood,
                 std::string family = "custom")
      : grid_(std::move(grid)), likelihood_(std::move(likelihood)),
        family_(std::move(family)) {
    if (!likelihood_) throw config_error("likelihood must be callable");
  }

  const parameter_grid& grid() const { return grid_; }
  const std::string& family() const { return family_; }

  double likelihood(std::size_t point, const std::string& observation) const {
    const double v = likelihood_(point, observation);
    if (!std::isfinite(v) || v < 0.0)
      throw evaluation_error("likelihood must be finite and non-negative at '" +
                             grid_.point(point).id + "'");
    return v;
  }

private:
  parameter_grid grid_;
  likelihood_fn likelihood_;
  std::string family_;
};

/// Per-point posterior masses conditioned on one observation.
class posterior {
public:
  static posterior from_masses(parameter_grid grid, std::vector<double> masses,
                               std::string observation = "") {
    if (masses.size() != grid.size())
      throw config_error("posterior must assign one mass to every grid point");
    double total = 0.0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
      if (!std::isfinite(masses[i]) || masses[i] < 0.0)
        throw config_error("posterior masses must be finite and >= 0");
      if (grid.point(i).prior == 0.0 && masses[i] != 0.0)
        throw config_error("posterior mass must vanish where the prior vanishes");
      total += masses[i];
    }
    if (std::abs(total - 1.0) > mass_tolerance)
      throw config_error("posterior masses must sum to 1");
    return posterior(std::move(grid), std::move(masses), std::move(observation));
  }

  const parameter_grid& grid() const { return grid_; }
  std::span<const double> masses() const { return masses_; }
  double mass(std::size_t i) const { return masses_.at(i); }
  const std::string& observation() const { return observation_; }

private:
  posterior(parameter_grid grid, std::vector<double> masses, std::string obs)
      : grid_(std::move(grid)), masses_(std::move(masses)),
        observation_(std::move(obs)) {}

  parameter_grid grid_;
  std::vector<double> masses_;
  std::string observation_;
};

/// Bayes update on the grid: mass[i] = prior[i] * lik(i,x) / sum_j prior[j] * lik(j,x).
inline posterior compute_posterior(const discrete_model& model,
                                   const std::string& observation) {
  const auto& grid = model.grid();
  std::vector<double> weights(grid.size());
  double normalizer = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    weights[i] = grid.point(i).prior * model.likelihood(i, observation);
    normalizer += weights[i];
  }
  if (normalizer <= 0.0)
    throw zero_normalizer_error(
        "posterior undefined: every prior-weighted likelihood is zero at "
        "observation '" + observation + "'");
  for (double& w : weights) w /= normalizer;
  return posterior::from_masses(grid, std::move(weights), observation);
}

/// Posterior probability of a hypothesis: the sum of its members' masses.
inline double prob(const posterior& post, const hypothesis& h) {
  if (h.universe() != post.grid().size())
    throw evaluation_error("hypothesis does not live on the posterior's grid");
  double total = 0.0;
  for (std::size_t i = 0; i < h.universe(); ++i)
    if (h.contains(i)) total += post.mass(i);
  return total;
}

// --- built-in model families ------------------------------------------------

namespace detail {

inline double binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (unsigned i = 1; i <= k; ++i)
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

/// Observation key "<successes>/<trials>", e.g. "7/10".
inline std::pair<unsigned, unsigned> parse_count_observation(const std::string& obs) {
  const auto slash = obs.find('/');
  if (slash == std::string::npos)
    throw config_error("count observation must look like \"<successes>/<trials>\", got '" + obs + "'");
  unsigned k = 0, n = 0;
  try {
    k = static_cast<unsigned>(std::stoul(obs.substr(0, slash)));
    n = static_cast<unsigned>(std::stoul(obs.substr(slash + 1)));
  } catch (const std::exception&) {
    throw config_error("could not parse count observation '" + obs + "'");
  }
  if (k > n)
    throw config_error("successes exceed trials in observation '" + obs + "'");
  return {k, n};
}

inline parameter_grid equispaced_probability_grid(std::size_t resolution) {
  if (resolution < 2)
    throw config_error("probability grids need at least 2 points");
  std::vector<grid_point> pts;
  pts.reserve(resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double theta =
        static_cast<double>(i) / static_cast<double>(resolution - 1);
    pts.push_back({"theta" + std::to_string(i), {theta},
                   1.0 / static_cast<double>(resolution),
                   1.0 / static_cast<double>(resolution)});
  }
  return parameter_grid(std::move(pts));
}

} // namespace detail

/// Binomial sampling model on an equispaced success-probability grid over
/// [0,1]. Observations are "<successes>/<trials>" keys.
inline discrete_model make_binomial_grid_model(std::size_t resolution) {
  parameter_grid grid = detail::equispaced_probability_grid(resolution);
  auto lik = [grid](std::size_t i, const std::string& obs) {
    const auto [k, n] = detail::parse_count_observation(obs);
    const double theta = grid.point(i).coord.at(0);
    return detail::binomial_coefficient(n, k) * std::pow(theta, k) *
           std::pow(1.0 - theta, n - k);
  };
  return discrete_model(std::move(grid), std::move(lik), "binomial-grid");
}

/// Bernoulli sampling model over explicit success probabilities. An
/// observation is a string of '0'/'1' trial outcomes ("" means no data);
/// the likelihood is the i.i.d. product.
inline discrete_model make_bernoulli_grid_model(std::vector<double> thetas) {
  if (thetas.size() < 2)
    throw config_error("bernoulli grids need at least 2 points");
  std::vector<grid_point> pts;
  pts.reserve(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] >= 0.0 && thetas[i] <= 1.0))
      throw config_error("bernoulli success probabilities must lie in [0,1]");
    pts.push_back({"theta" + std::to_string(i), {thetas[i]},
                   1.0 / static_cast<double>(thetas.size()),
                   1.0 / static_cast<double>(thetas.size())});
  }
  parameter_grid grid{std::move(pts)};
  auto lik = [grid](std::size_t i, const std::string& obs) {
    const double theta = grid.point(i).coord.at(0);
    double value = 1.0;
    for (char c : obs) {
      if (c == '1') value *= theta;
      else if (c == '0') value *= 1.0 - theta;
      else throw config_error("bernoulli observations are strings over {0,1}");
    }
    return value;
  };
  return discrete_model(std::move(grid), std::move(lik), "bernoulli-grid");
}

/// Model given by an explicit likelihood table: observation key -> one
/// density value per grid point.
inline discrete_model make_tabular_model(
    parameter_grid grid, std::map<std::string, std::vector<double>> table) {
  for (const auto& [key, values] : table) {
    if (values.size() != grid.size())
      throw config_error("likelihood row '" + key +
                         "' must list one value per grid point");
    for (double v : values)
      if (!std::isfinite(v) || v < 0.0)
        throw config_error("likelihood values must be finite and >= 0");
  }
  auto lik = [table = std::move(table)](std::size_t i, const std::string& obs) {
    auto it = table.find(obs);
    if (it == table.end())
      throw evaluation_error("unknown observation key '" + obs + "'");
    return it->second[i];
  };
  return discrete_model(std::move(grid), std::move(lik), "tabular");
}

} // namespace credal
