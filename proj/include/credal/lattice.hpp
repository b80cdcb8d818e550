// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/grid.hpp"
#include "credal/hypothesis.hpp"
#include "credal/modality.hpp"

namespace credal {

inline hypothesis complement(const parameter_grid& grid, const hypothesis& h) {
  if (h.universe() != grid.size())
    throw evaluation_error("hypothesis does not live on this grid");
  return h.complement();
}

inline hypothesis family_union(std::span<const hypothesis> family) {
  if (family.empty())
    throw empty_set_error("union over an empty hypothesis family");
  hypothesis out = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) out = out | family[i];
  return out;
}

inline hypothesis family_intersection(std::span<const hypothesis> family) {
  if (family.empty())
    throw empty_set_error("intersection over an empty hypothesis family");
  hypothesis out = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) out = out & family[i];
  return out;
}

/// Verdict of the region-based test with estimator S: accept when S is
/// contained in H, reject when S is disjoint from H, agnostic when S meets
/// both H and its complement. An empty S makes the first two cases overlap
/// for every H, so it is rejected outright.
inline verdict region_test_evaluate(const hypothesis& region, const hypothesis& h) {
  if (region.universe() != h.universe())
    throw evaluation_error("region and hypothesis live on different grids");
  if (region.is_empty())
    throw empty_region_error("region estimator must be non-empty");
  if (region.subset_of(h)) return verdict::accept;
  if (region.disjoint_from(h)) return verdict::reject;
  return verdict::agnostic;
}

/// Iterable over all 2^n subsets of an n-point grid, in binary counting
/// order on point indices. Guarded against combinatorial blow-up.
class subset_range {
public:
  explicit subset_range(std::size_t universe) : universe_(universe) {
    if (universe > max_enumerable_points)
      throw size_guard_error(
          "exhaustive enumeration is limited to " +
          std::to_string(max_enumerable_points) + " grid points (got " +
          std::to_string(universe) + ")");
  }

  class iterator {
  public:
    using value_type = hypothesis;
    using difference_type = std::ptrdiff_t;

    iterator(std::size_t universe, std::uint64_t mask)
        : universe_(universe), mask_(mask) {}

    hypothesis operator*() const { return hypothesis::from_mask(universe_, mask_); }
    iterator& operator++() { ++mask_; return *this; }
    iterator operator++(int) { iterator t = *this; ++mask_; return t; }
    bool operator==(const iterator&) const = default;

  private:
    std::size_t universe_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {universe_, 0}; }
  iterator end() const { return {universe_, subset_count()}; }
  std::uint64_t subset_count() const { return std::uint64_t{1} << universe_; }

private:
  std::size_t universe_;
};

inline subset_range enumerate_hypotheses(const parameter_grid& grid) {
  return subset_range(grid.size());
}

/// A total, deterministic map from hypotheses to verdicts, in one of three
/// forms: an explicit table over every subset, a region estimator, or a
/// user-supplied deterministic rule.
class agnostic_test {
public:
  using rule_fn = std::function<verdict(const hypothesis&)>;

  static agnostic_test from_table(parameter_grid grid, std::vector<verdict> by_mask) {
    if (grid.size() > max_enumerable_points)
      throw size_guard_error("explicit tables are limited to " +
                             std::to_string(max_enumerable_points) + " grid points");
    if (by_mask.size() != (std::size_t{1} << grid.size()))
      throw config_error("explicit table must assign a verdict to every subset");
    agnostic_test t(std::move(grid), "explicit table");
    t.table_ = std::move(by_mask);
    return t;
  }

  static agnostic_test from_region(parameter_grid grid, hypothesis region) {
    if (region.universe() != grid.size())
      throw evaluation_error("region does not live on this grid");
    if (region.is_empty())
      throw empty_region_error("region estimator must be non-empty");
    agnostic_test t(std::move(grid), "region test");
    t.region_ = std::move(region);
    return t;
  }

  /// The rule must be deterministic and side-effect free; this is a contract
  /// on the caller.
  static agnostic_test from_rule(parameter_grid grid, rule_fn fn, std::string description) {
    if (!fn) throw config_error("rule must be callable");
    agnostic_test t(std::move(grid), std::move(description));
    t.rule_ = std::move(fn);
    return t;
  }

  verdict operator()(const hypothesis& h) const {
    if (h.universe() != grid_.size())
      throw evaluation_error("hypothesis does not live on this test's grid");
    if (!table_.empty()) return table_[h.mask()];
    if (region_) return region_test_evaluate(*region_, h);
    return rule_(h);
  }

  const parameter_grid& grid() const { return grid_; }
  const std::string& description() const { return description_; }
  const std::optional<hypothesis>& region_estimator() const { return region_; }

private:
  agnostic_test(parameter_grid grid, std::string description)
      : grid_(std::move(grid)), description_(std::move(description)) {}

  parameter_grid grid_;
  std::optional<hypothesis> region_;
  std::vector<verdict> table_;
  rule_fn rule_;
  std::string description_;
};

} // namespace credal
