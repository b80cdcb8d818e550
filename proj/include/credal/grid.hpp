// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

inline constexpr double mass_tolerance = 1e-12;

/// Single-hypothesis evaluation is supported on grids up to this size.
inline constexpr std::size_t max_grid_points = 4096;

/// Exhaustive subset enumeration is supported on grids up to this size.
inline constexpr std::size_t max_enumerable_points = 20;

struct grid_point {
  std::string id;
  std::vector<double> coord;  // optional real coordinates
  double prior = 0.0;         // prior mass, >= 0
  double reference = 1.0;     // reference density weight, > 0
};

/// A finite parameter space: an ordered list of points carrying prior mass
/// and a reference-density weight. Immutable after construction.
class parameter_grid {
public:
  explicit parameter_grid(std::vector<grid_point> points)
      : points_(std::move(points)) {
    validate();
    for (std::size_t i = 0; i < points_.size(); ++i)
      index_[points_[i].id] = i;
  }

  /// Convenience constructor: uniform prior and reference over named points.
  static parameter_grid uniform(std::vector<std::string> ids) {
    std::vector<grid_point> pts;
    pts.reserve(ids.size());
    const double n = static_cast<double>(ids.size());
    for (auto& id : ids)
      pts.push_back({std::move(id), {}, 1.0 / n, 1.0 / n});
    return parameter_grid(std::move(pts));
  }

  std::size_t size() const { return points_.size(); }
  const grid_point& point(std::size_t i) const { return points_.at(i); }
  const std::vector<grid_point>& points() const { return points_; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Two grids are interchangeable when they list the same point ids in the
  /// same order.
  bool same_points(const parameter_grid& other) const {
    if (points_.size() != other.points_.size()) return false;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].id != other.points_[i].id) return false;
    return true;
  }

private:
  void validate() const {
    if (points_.empty())
      throw config_error("parameter grid must contain at least one point");
    if (points_.size() > max_grid_points)
      throw config_error("parameter grid exceeds the " +
                         std::to_string(max_grid_points) + "-point cap");
    double total = 0.0;
    for (const auto& p : points_) {
      if (p.id.empty()) throw config_error("grid point id must be non-empty");
      if (!(p.prior >= 0.0) || !std::isfinite(p.prior))
        throw config_error("prior mass of '" + p.id + "' must be finite and >= 0");
      if (!(p.reference > 0.0) || !std::isfinite(p.reference))
        throw config_error("reference weight of '" + p.id + "' must be > 0");
      total += p.prior;
    }
    if (std::abs(total - 1.0) > mass_tolerance)
      throw config_error("prior masses must sum to 1 (got " +
                         std::to_string(total) + ")");
    std::unordered_map<std::string_view, int> seen;
    for (const auto& p : points_)
      if (++seen[p.id] > 1)
        throw config_error("duplicate grid point id '" + p.id + "'");
  }

  std::vector<grid_point> points_;
  std::unordered_map<std::string, std::size_t> index_;
};

} // namespace credal
