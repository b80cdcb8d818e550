// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <random>
#include <string>
#include <vector>

#include "credal/bayes.hpp"

namespace credal::testing {

/// Three-point fixture with posterior masses (0.5, 0.3, 0.2), built through
/// the Bayes update from a uniform prior and a tabular likelihood.
inline posterior g3_posterior() {
  parameter_grid grid = parameter_grid::uniform({"theta1", "theta2", "theta3"});
  discrete_model model =
      make_tabular_model(grid, {{"x", {0.5, 0.3, 0.2}}});
  return compute_posterior(model, "x");
}

inline posterior uniform_posterior(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("theta" + std::to_string(i + 1));
  parameter_grid grid = parameter_grid::uniform(std::move(ids));
  std::vector<double> ones(n, 1.0);
  discrete_model model = make_tabular_model(grid, {{"x", std::move(ones)}});
  return compute_posterior(model, "x");
}

/// Random strictly-positive posterior on n points, deterministic in the rng.
inline posterior random_posterior(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("theta" + std::to_string(i + 1));
  parameter_grid grid = parameter_grid::uniform(std::move(ids));
  std::vector<double> lik(n);
  for (double& v : lik)
    v = 1.0 + static_cast<double>(rng() % 1000);  // in [1, 1000]
  discrete_model model = make_tabular_model(grid, {{"x", std::move(lik)}});
  return compute_posterior(model, "x");
}

} // namespace credal::testing
