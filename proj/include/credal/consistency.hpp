// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/lattice.hpp"
#include "credal/modality.hpp"

namespace credal {

/// Exhaustive-vs-sampled switchover. Single-quantifier checks enumerate all
/// 2^n hypotheses up to `exhaustive_single_limit` points; pair-quantifier
/// checks enumerate all pairs up to `exhaustive_pair_limit`. Larger grids
/// fall back to a seeded sampler so failures replay.
struct sampling_policy {
  std::size_t exhaustive_single_limit = 12;
  std::size_t exhaustive_pair_limit = 8;
  std::uint64_t seed = 0;
  std::size_t trials = 2048;
};

enum class check_mode { exhaustive, sampled };

struct counterexample {
  std::vector<hypothesis> hypotheses;
  std::vector<verdict> verdicts;
  std::string note;
};

struct check_result {
  bool pass = true;
  std::optional<counterexample> witness;
};

namespace detail {

inline hypothesis random_hypothesis(std::mt19937_64& rng, std::size_t universe) {
  hypothesis h(universe);
  for (std::size_t i = 0; i < universe; i += 64) {
    const std::uint64_t word = rng();
    for (std::size_t b = 0; b < 64 && i + b < universe; ++b)
      if ((word >> b) & 1u) h.add(i + b);
  }
  return h;
}

/// Structured probes always included in sampled mode: the empty set, the
/// whole space, and every singleton with its complement.
inline std::vector<hypothesis> structured_probes(std::size_t universe) {
  std::vector<hypothesis> out;
  out.push_back(hypothesis::empty_set(universe));
  out.push_back(hypothesis::full_set(universe));
  for (std::size_t i = 0; i < universe; ++i) {
    hypothesis single = hypothesis::of(universe, {i});
    out.push_back(single.complement());
    out.push_back(std::move(single));
  }
  return out;
}

/// Verdicts of every subset, indexed by mask. Only for enumerable grids.
inline std::vector<verdict> verdict_table(const agnostic_test& test) {
  const std::size_t n = test.grid().size();
  std::vector<verdict> table;
  table.reserve(std::size_t{1} << n);
  for (const hypothesis& h : subset_range(n)) table.push_back(test(h));
  return table;
}

} // namespace detail

/// Invertibility: a hypothesis and its complement are either both agnostic
/// or one accepted and the other rejected.
inline check_result check_invertibility(const agnostic_test& test,
                                        const sampling_policy& policy = {}) {
  const std::size_t n = test.grid().size();
  auto violates = [&](const hypothesis& h) -> std::optional<counterexample> {
    const hypothesis hc = h.complement();
    const verdict v = test(h);
    const verdict vc = test(hc);
    const bool ok = ((v == verdict::accept) == (vc == verdict::reject)) &&
                    ((v == verdict::agnostic) == (vc == verdict::agnostic));
    if (ok) return std::nullopt;
    return counterexample{{h, hc}, {v, vc}, "hypothesis vs complement"};
  };

  if (n <= policy.exhaustive_single_limit) {
    for (const hypothesis& h : subset_range(n))
      if (auto ce = violates(h)) return {false, std::move(ce)};
    return {};
  }
  std::mt19937_64 rng(policy.seed);
  for (const hypothesis& h : detail::structured_probes(n))
    if (auto ce = violates(h)) return {false, std::move(ce)};
  for (std::size_t t = 0; t < policy.trials; ++t)
    if (auto ce = violates(detail::random_hypothesis(rng, n)))
      return {false, std::move(ce)};
  return {};
}

/// Monotonicity: enlarging a hypothesis never makes the verdict less
/// favorable (acceptance propagates up, non-rejection propagates up).
inline check_result check_monotonicity(const agnostic_test& test,
                                       const sampling_policy& policy = {}) {
  const std::size_t n = test.grid().size();
  auto violates = [&](const hypothesis& smaller, const hypothesis& larger,
                      verdict vs, verdict vl) -> std::optional<counterexample> {
    const bool ok = (vs != verdict::accept || vl == verdict::accept) &&
                    (vs == verdict::reject || vl != verdict::reject);
    if (ok) return std::nullopt;
    return counterexample{{smaller, larger}, {vs, vl}, "nested pair"};
  };

  if (n <= policy.exhaustive_pair_limit) {
    const auto table = detail::verdict_table(test);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t larger = 0; larger <= full; ++larger) {
      // Every submask of `larger`, including itself and the empty set.
      std::uint64_t sub = larger;
      while (true) {
        if (auto ce = violates(hypothesis::from_mask(n, sub),
                               hypothesis::from_mask(n, larger), table[sub],
                               table[larger]))
          return {false, std::move(ce)};
        if (sub == 0) break;
        sub = (sub - 1) & larger;
      }
    }
    return {};
  }
  std::mt19937_64 rng(policy.seed);
  for (std::size_t t = 0; t < policy.trials; ++t) {
    const hypothesis larger = detail::random_hypothesis(rng, n);
    const hypothesis smaller = larger & detail::random_hypothesis(rng, n);
    if (auto ce = violates(smaller, larger, test(smaller), test(larger)))
      return {false, std::move(ce)};
  }
  return {};
}

namespace detail {

enum class consonance_side { union_side, intersection_side };

/// Pairwise closure check; closure under arbitrary finite families follows
/// by induction on the (finite) grid.
inline check_result check_consonance(const agnostic_test& test,
                                     consonance_side side,
                                     const sampling_policy& policy) {
  const std::size_t n = test.grid().size();
  const verdict closed = side == consonance_side::union_side
                             ? verdict::reject
                             : verdict::accept;
  auto combine = [&](const hypothesis& a, const hypothesis& b) {
    return side == consonance_side::union_side ? (a | b) : (a & b);
  };
  auto violates = [&](const hypothesis& a, verdict va, const hypothesis& b,
                      verdict vb) -> std::optional<counterexample> {
    if (va != closed || vb != closed) return std::nullopt;
    const hypothesis c = combine(a, b);
    const verdict vc = test(c);
    if (vc == closed) return std::nullopt;
    return counterexample{{a, b, c},
                          {va, vb, vc},
                          side == consonance_side::union_side
                              ? "rejected pair with non-rejected union"
                              : "accepted pair with non-accepted intersection"};
  };

  if (n <= policy.exhaustive_pair_limit) {
    const auto table = detail::verdict_table(test);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> closed_masks;
    for (std::uint64_t m = 0; m < count; ++m)
      if (table[m] == closed) closed_masks.push_back(m);
    for (std::size_t i = 0; i < closed_masks.size(); ++i)
      for (std::size_t j = i; j < closed_masks.size(); ++j) {
        const std::uint64_t a = closed_masks[i];
        const std::uint64_t b = closed_masks[j];
        if (auto ce = violates(hypothesis::from_mask(n, a), table[a],
                               hypothesis::from_mask(n, b), table[b]))
          return {false, std::move(ce)};
      }
    return {};
  }
  // Structured probes first: overlapping index windows of every width and
  // their complements. These catch the classic sub-threshold partition
  // failures regardless of grid size.
  for (std::size_t width = 1; width + 1 < n; ++width) {
    hypothesis a(n);
    hypothesis b(n);
    for (std::size_t i = 0; i < width; ++i) {
      a.add(i);
      b.add(i + 1);
    }
    for (const auto& [x, y] :
         {std::pair{a, b}, std::pair{a.complement(), b.complement()}})
      if (auto ce = violates(x, test(x), y, test(y)))
        return {false, std::move(ce)};
  }
  std::mt19937_64 rng(policy.seed);
  for (std::size_t t = 0; t < policy.trials; ++t) {
    const hypothesis a = detail::random_hypothesis(rng, n);
    const hypothesis b = detail::random_hypothesis(rng, n);
    if (auto ce = violates(a, test(a), b, test(b)))
      return {false, std::move(ce)};
  }
  return {};
}

} // namespace detail

/// Union consonance: the rejected hypotheses are closed under union.
inline check_result check_union_consonance(const agnostic_test& test,
                                           const sampling_policy& policy = {}) {
  return detail::check_consonance(test, detail::consonance_side::union_side,
                                  policy);
}

/// Intersection consonance: the accepted hypotheses are closed under
/// intersection.
inline check_result check_intersection_consonance(
    const agnostic_test& test, const sampling_policy& policy = {}) {
  return detail::check_consonance(
      test, detail::consonance_side::intersection_side, policy);
}

struct consistency_report {
  check_result invertibility;
  check_result monotonicity;
  check_result union_consonance;
  check_result intersection_consonance;
  check_result accepts_whole_space;
  bool overall = false;
  check_mode mode = check_mode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

/// Runs the four structural checks plus the whole-space acceptance check.
inline consistency_report classify(const agnostic_test& test,
                                   const sampling_policy& policy = {}) {
  const std::size_t n = test.grid().size();
  consistency_report report;
  report.invertibility = check_invertibility(test, policy);
  report.monotonicity = check_monotonicity(test, policy);
  report.union_consonance = check_union_consonance(test, policy);
  report.intersection_consonance = check_intersection_consonance(test, policy);

  const hypothesis whole = hypothesis::full_set(n);
  const verdict v = test(whole);
  if (v == verdict::accept) {
    report.accepts_whole_space = {};
  } else {
    report.accepts_whole_space = {
        false, counterexample{{whole}, {v}, "whole space not accepted"}};
  }

  report.overall = report.invertibility.pass && report.monotonicity.pass &&
                   report.union_consonance.pass &&
                   report.intersection_consonance.pass &&
                   report.accepts_whole_space.pass;
  const bool exhaustive = n <= policy.exhaustive_single_limit &&
                          n <= policy.exhaustive_pair_limit;
  report.mode = exhaustive ? check_mode::exhaustive : check_mode::sampled;
  report.seed = policy.seed;
  report.trials = exhaustive ? 0 : policy.trials;
  return report;
}

/// The region estimator of a logically consistent test: the points whose
/// singletons are not rejected.
inline hypothesis extract_region(const agnostic_test& test,
                                 const sampling_policy& policy = {}) {
  if (!classify(test, policy).overall)
    throw precondition_error(
        "region extraction requires a logically consistent test");
  const std::size_t n = test.grid().size();
  hypothesis region(n);
  for (std::size_t i = 0; i < n; ++i)
    if (test(hypothesis::of(n, {i})) != verdict::reject) region.add(i);
  return region;
}

/// Checks that the test is exactly the region-based test built from S.
inline check_result verify_representation(const agnostic_test& test,
                                          const hypothesis& region,
                                          const sampling_policy& policy = {}) {
  const std::size_t n = test.grid().size();
  if (region.universe() != n)
    throw evaluation_error("region does not live on this test's grid");
  if (region.is_empty())
    return {false,
            counterexample{{region}, {}, "the empty set represents no test"}};

  auto violates = [&](const hypothesis& h) -> std::optional<counterexample> {
    const verdict got = test(h);
    const verdict want = region_test_evaluate(region, h);
    if (got == want) return std::nullopt;
    return counterexample{{h}, {got, want}, "test disagrees with region form"};
  };

  if (n <= policy.exhaustive_single_limit) {
    for (const hypothesis& h : subset_range(n))
      if (auto ce = violates(h)) return {false, std::move(ce)};
    return {};
  }
  std::mt19937_64 rng(policy.seed);
  for (const hypothesis& h : detail::structured_probes(n))
    if (auto ce = violates(h)) return {false, std::move(ce)};
  for (std::size_t t = 0; t < policy.trials; ++t)
    if (auto ce = violates(detail::random_hypothesis(rng, n)))
      return {false, std::move(ce)};
  return {};
}

/// Deduction over decided hypotheses: accepting "not (H1 and H2)" must
/// coincide with not accepting both H1 and H2. Requires a logically
/// consistent test and two decided inputs.
inline bool check_nand_lemma(const agnostic_test& test, const hypothesis& h1,
                             const hypothesis& h2) {
  const verdict v1 = test(h1);
  const verdict v2 = test(h2);
  if (v1 == verdict::agnostic || v2 == verdict::agnostic)
    throw precondition_error("nand deduction needs decided hypotheses");
  const hypothesis nand_set = (h1 & h2).complement();
  const bool lhs = test(nand_set) == verdict::accept;
  const bool rhs = !(v1 == verdict::accept && v2 == verdict::accept);
  return lhs == rhs;
}

} // namespace credal
