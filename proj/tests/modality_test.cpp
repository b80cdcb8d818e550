// Apache License, Version 2.0, refer to LICENSE.txt
#include "doctest.h"

#include "credal/modality.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace credal;

namespace {

modality_assignment assignment_of(std::initializer_list<modality> truths) {
  modality_assignment a;
  for (modality m : truths) a.set(m, true);
  return a;
}

} // namespace

TEST_CASE("each verdict induces its three table modalities") {
  const auto accept = modalities_of(verdict::accept);
  CHECK(accept == assignment_of({modality::necessity, modality::possibility,
                                 modality::non_contingency}));

  const auto agnostic = modalities_of(verdict::agnostic);
  CHECK(agnostic == assignment_of({modality::contingency, modality::possibility,
                                   modality::non_necessity}));

  const auto reject = modalities_of(verdict::reject);
  CHECK(reject == assignment_of({modality::impossibility, modality::non_necessity,
                                 modality::non_contingency}));

  for (verdict v : all_verdicts) CHECK(modalities_of(v).count() == 3);
}

TEST_CASE("table equivalences hold as predicate identities on all verdicts") {
  for (verdict v : all_verdicts) {
    const auto a = modalities_of(v);
    for (modality m : all_modalities) CHECK(equivalence_holds(m, a));
    // Spelled out for the records that matter most:
    CHECK(a[modality::non_contingency] ==
          (a[modality::necessity] || a[modality::impossibility]));
    CHECK(a[modality::necessity] ==
          (a[modality::non_contingency] && a[modality::possibility]));
    CHECK(a[modality::contingency] ==
          (a[modality::possibility] && !a[modality::necessity]));
  }
}

TEST_CASE("hexagon edge set is complete and correctly typed") {
  const auto& edges = hexagon_relations();
  CHECK(edges.size() == 15);

  // Every unordered pair of distinct modalities appears exactly once.
  std::set<std::pair<char, char>> seen;
  for (const auto& e : edges) {
    char x = modality_letter(e.first);
    char y = modality_letter(e.second);
    if (x > y) std::swap(x, y);
    CHECK(x != y);
    CHECK(seen.insert({x, y}).second);
  }
  CHECK(seen.size() == 15);

  auto contains = [&](relation_kind k, modality a, modality b) {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
      return e == opposition_relation{k, a, b} ||
             (k != relation_kind::implication &&
              e == opposition_relation{k, b, a});
    });
  };
  CHECK(contains(relation_kind::contradiction, modality::non_contingency,
                 modality::contingency));
  CHECK(contains(relation_kind::implication, modality::necessity,
                 modality::possibility));
  CHECK(contains(relation_kind::contrariety, modality::necessity,
                 modality::impossibility));
}

TEST_CASE("hard-coded edges agree with a derivation from the table predicates") {
  // Derivation oracle: a relation kind holds for a pair iff its defining
  // property holds across all three verdicts.
  auto implication_valid = [](modality p, modality q) {
    for (verdict v : all_verdicts)
      if (modality_holds(p, v) && !modality_holds(q, v)) return false;
    return true;
  };
  auto contrariety_valid = [](modality p, modality q) {
    for (verdict v : all_verdicts)
      if (modality_holds(p, v) && modality_holds(q, v)) return false;
    return true;
  };
  auto subcontrariety_valid = [](modality p, modality q) {
    for (verdict v : all_verdicts)
      if (!modality_holds(p, v) && !modality_holds(q, v)) return false;
    return true;
  };
  auto contradiction_valid = [](modality p, modality q) {
    for (verdict v : all_verdicts)
      if (modality_holds(p, v) == modality_holds(q, v)) return false;
    return true;
  };

  for (const auto& e : hexagon_relations()) {
    switch (e.kind) {
    case relation_kind::implication:
      CHECK(implication_valid(e.first, e.second));
      break;
    case relation_kind::contrariety:
      CHECK(contrariety_valid(e.first, e.second));
      // A contrariety edge must not secretly be a contradiction.
      CHECK(!contradiction_valid(e.first, e.second));
      break;
    case relation_kind::subcontrariety:
      CHECK(subcontrariety_valid(e.first, e.second));
      CHECK(!contradiction_valid(e.first, e.second));
      break;
    case relation_kind::contradiction:
      CHECK(contradiction_valid(e.first, e.second));
      break;
    }
  }
}

TEST_CASE("verdict images pass the hexagon check") {
  for (verdict v : all_verdicts) {
    const auto report = check_hexagon(modalities_of(v));
    CHECK(report.ok());
    CHECK(report.violated_relations.empty());
    CHECK(report.violated_equivalences.empty());
  }
}

TEST_CASE("contrary pair produces the expected violations") {
  modality_assignment a;
  a.set(modality::necessity, true);
  a.set(modality::impossibility, true);
  const auto report = check_hexagon(a);
  CHECK(!report.ok());
  CHECK(report.contains({relation_kind::contrariety, modality::necessity,
                         modality::impossibility}));
  CHECK(report.contains({relation_kind::implication, modality::necessity,
                         modality::possibility}));
  CHECK(report.contains({relation_kind::implication, modality::necessity,
                         modality::non_contingency}));
}

TEST_CASE("all-false assignment violates every subcontrariety and contradiction") {
  const auto report = check_hexagon(modality_assignment{});
  CHECK(!report.ok());
  for (const auto& e : hexagon_relations()) {
    switch (e.kind) {
    case relation_kind::subcontrariety:
    case relation_kind::contradiction:
      CHECK(report.contains(e));
      break;
    case relation_kind::implication:
    case relation_kind::contrariety:
      CHECK(!report.contains(e));
      break;
    }
  }
}

TEST_CASE("exactly 3 of 64 assignments are hexagon-consistent") {
  std::vector<modality_assignment> passing;
  for (const auto& a : modality_assignment::enumerate_all())
    if (check_hexagon(a).ok()) passing.push_back(a);
  REQUIRE(passing.size() == 3);
  for (verdict v : all_verdicts) {
    CHECK(std::find(passing.begin(), passing.end(), modalities_of(v)) !=
          passing.end());
    CHECK(verdict_of(modalities_of(v)) == v);
  }
}

TEST_CASE("binary edges alone admit one extra assignment, excluded by the equivalences") {
  // The {I,O,U} assignment satisfies all 15 opposition edges but is the
  // image of no verdict; the table equivalences reject it.
  const auto spurious = assignment_of({modality::possibility,
                                       modality::non_necessity,
                                       modality::non_contingency});
  const auto report = check_hexagon(spurious);
  CHECK(report.violated_relations.empty());
  CHECK(!report.violated_equivalences.empty());
  CHECK(!report.ok());
  CHECK(!verdict_of(spurious).has_value());

  std::size_t edge_only_pass = 0;
  for (const auto& a : modality_assignment::enumerate_all())
    if (check_hexagon(a).violated_relations.empty()) ++edge_only_pass;
  CHECK(edge_only_pass == 4);
}

TEST_CASE("serialization letters and verdict names") {
  CHECK(modality_letter(modality::necessity) == 'A');
  CHECK(modality_letter(modality::impossibility) == 'E');
  CHECK(modality_letter(modality::contingency) == 'Y');
  CHECK(modality_letter(modality::possibility) == 'I');
  CHECK(modality_letter(modality::non_necessity) == 'O');
  CHECK(modality_letter(modality::non_contingency) == 'U');
  for (modality m : all_modalities)
    CHECK(parse_modality(modality_letter(m)) == m);
  CHECK(!parse_modality('X').has_value());

  CHECK(verdict_name(verdict::accept) == "accept");
  CHECK(verdict_value(verdict::accept) == 0.0);
  CHECK(verdict_value(verdict::agnostic) == 0.5);
  CHECK(verdict_value(verdict::reject) == 1.0);
  CHECK(parse_verdict("agnostic") == verdict::agnostic);
  CHECK(parse_verdict("0.5") == verdict::agnostic);
  CHECK(parse_verdict("1") == verdict::reject);
  CHECK(!parse_verdict("maybe").has_value());
}
