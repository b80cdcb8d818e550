// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

/// Three-valued outcome of an agnostic hypothesis test.
enum class verdict : std::uint8_t { accept, agnostic, reject };

inline constexpr std::array<verdict, 3> all_verdicts = {
    verdict::accept, verdict::agnostic, verdict::reject};

/// Display value of a verdict: 0 (accept), 0.5 (agnostic), 1 (reject).
/// Verdicts are an enumeration; these numerals exist for display only.
constexpr double verdict_value(verdict v) {
  switch (v) {
  case verdict::accept: return 0.0;
  case verdict::agnostic: return 0.5;
  default: return 1.0;
  }
}

constexpr std::string_view verdict_name(verdict v) {
  switch (v) {
  case verdict::accept: return "accept";
  case verdict::agnostic: return "agnostic";
  default: return "reject";
  }
}

inline std::optional<verdict> parse_verdict(std::string_view s) {
  if (s == "accept" || s == "0") return verdict::accept;
  if (s == "agnostic" || s == "0.5") return verdict::agnostic;
  if (s == "reject" || s == "1") return verdict::reject;
  return std::nullopt;
}

/// The six credal modalities, one per vertex of the hexagon of oppositions.
/// Vertex letters follow the classical naming: A, E, Y, I, O, U.
enum class modality : std::uint8_t {
  necessity,        // A: the hypothesis is accepted
  impossibility,    // E: the hypothesis is rejected
  contingency,      // Y: the hypothesis is left undecided
  possibility,      // I: the hypothesis is not rejected
  non_necessity,    // O: the hypothesis is not accepted
  non_contingency,  // U: the hypothesis is decided either way
};

inline constexpr std::array<modality, 6> all_modalities = {
    modality::necessity,     modality::impossibility, modality::contingency,
    modality::possibility,   modality::non_necessity, modality::non_contingency};

constexpr char modality_letter(modality m) {
  switch (m) {
  case modality::necessity: return 'A';
  case modality::impossibility: return 'E';
  case modality::contingency: return 'Y';
  case modality::possibility: return 'I';
  case modality::non_necessity: return 'O';
  default: return 'U';
  }
}

constexpr std::string_view modality_name(modality m) {
  switch (m) {
  case modality::necessity: return "necessity";
  case modality::impossibility: return "impossibility";
  case modality::contingency: return "contingency";
  case modality::possibility: return "possibility";
  case modality::non_necessity: return "non-necessity";
  default: return "non-contingency";
  }
}

inline std::optional<modality> parse_modality(char letter) {
  switch (letter) {
  case 'A': return modality::necessity;
  case 'E': return modality::impossibility;
  case 'Y': return modality::contingency;
  case 'I': return modality::possibility;
  case 'O': return modality::non_necessity;
  case 'U': return modality::non_contingency;
  default: return std::nullopt;
  }
}

/// Defining predicate of each modality over a verdict.
constexpr bool modality_holds(modality m, verdict v) {
  switch (m) {
  case modality::necessity: return v == verdict::accept;
  case modality::impossibility: return v == verdict::reject;
  case modality::contingency: return v == verdict::agnostic;
  case modality::possibility: return v != verdict::reject;
  case modality::non_necessity: return v != verdict::accept;
  default: return v != verdict::agnostic;  // non-contingency
  }
}

/// A total truth assignment over the six modalities.
class modality_assignment {
public:
  constexpr modality_assignment() = default;

  constexpr bool operator[](modality m) const {
    return bits_[static_cast<std::size_t>(m)];
  }
  constexpr void set(modality m, bool value) {
    bits_[static_cast<std::size_t>(m)] = value;
  }
  constexpr std::size_t count() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }
  constexpr bool operator==(const modality_assignment&) const = default;

  /// All 64 assignments, in binary counting order over (A,E,Y,I,O,U).
  static std::vector<modality_assignment> enumerate_all() {
    std::vector<modality_assignment> out;
    out.reserve(64);
    for (unsigned mask = 0; mask < 64; ++mask) {
      modality_assignment a;
      for (std::size_t i = 0; i < 6; ++i)
        a.set(all_modalities[i], (mask >> i) & 1u);
      out.push_back(a);
    }
    return out;
  }

private:
  std::array<bool, 6> bits_{};
};

/// The modalities that hold under a verdict; always exactly three are true.
inline modality_assignment modalities_of(verdict v) {
  modality_assignment a;
  for (modality m : all_modalities) a.set(m, modality_holds(m, v));
  return a;
}

/// Edge types of the hexagon of oppositions.
enum class relation_kind : std::uint8_t {
  implication,     // first true => second true
  contrariety,     // not both true
  subcontrariety,  // not both false
  contradiction,   // exactly one true
};

constexpr std::string_view relation_kind_name(relation_kind k) {
  switch (k) {
  case relation_kind::implication: return "implication";
  case relation_kind::contrariety: return "contrariety";
  case relation_kind::subcontrariety: return "subcontrariety";
  default: return "contradiction";
  }
}

/// One edge of the hexagon. Implications are ordered (first -> second);
/// the other kinds are symmetric and stored with a canonical endpoint order.
struct opposition_relation {
  relation_kind kind;
  modality first;
  modality second;

  constexpr bool operator==(const opposition_relation&) const = default;

  constexpr bool satisfied_by(const modality_assignment& a) const {
    const bool p = a[first];
    const bool q = a[second];
    switch (kind) {
    case relation_kind::implication: return !p || q;
    case relation_kind::contrariety: return !(p && q);
    case relation_kind::subcontrariety: return p || q;
    default: return p != q;  // contradiction
    }
  }

  std::string to_string() const {
    std::string s{relation_kind_name(kind)};
    s += ' ';
    s += modality_letter(first);
    s += kind == relation_kind::implication ? "->" : ",";
    s += modality_letter(second);
    return s;
  }
};

/// The complete, fixed edge set of the hexagon: six implication arrows on
/// the perimeter, the contrariety triangle A-E-Y, the subcontrariety
/// triangle I-O-U, and the three contradiction diagonals.
inline const std::vector<opposition_relation>& hexagon_relations() {
  using m = modality;
  using k = relation_kind;
  static const std::vector<opposition_relation> edges = {
      {k::implication, m::necessity, m::possibility},        // A -> I
      {k::implication, m::impossibility, m::non_necessity},  // E -> O
      {k::implication, m::necessity, m::non_contingency},    // A -> U
      {k::implication, m::impossibility, m::non_contingency},// E -> U
      {k::implication, m::contingency, m::possibility},      // Y -> I
      {k::implication, m::contingency, m::non_necessity},    // Y -> O
      {k::contrariety, m::necessity, m::impossibility},      // {A,E}
      {k::contrariety, m::necessity, m::contingency},        // {A,Y}
      {k::contrariety, m::impossibility, m::contingency},    // {E,Y}
      {k::subcontrariety, m::possibility, m::non_necessity},   // {I,O}
      {k::subcontrariety, m::possibility, m::non_contingency}, // {I,U}
      {k::subcontrariety, m::non_necessity, m::non_contingency}, // {O,U}
      {k::contradiction, m::necessity, m::non_necessity},    // {A,O}
      {k::contradiction, m::impossibility, m::possibility},  // {E,I}
      {k::contradiction, m::non_contingency, m::contingency},// {U,Y}
  };
  return edges;
}

/// The equivalence column of the modality table, as a predicate identity:
/// A = U and I, E = U and not A, Y = I and not A, I = A or Y, O = E or Y,
/// U = A or E.
constexpr bool equivalence_holds(modality m, const modality_assignment& a) {
  using md = modality;
  const bool A = a[md::necessity];
  const bool E = a[md::impossibility];
  const bool Y = a[md::contingency];
  const bool I = a[md::possibility];
  const bool O = a[md::non_necessity];
  const bool U = a[md::non_contingency];
  switch (m) {
  case md::necessity: return A == (U && I);
  case md::impossibility: return E == (U && !A);
  case md::contingency: return Y == (I && !A);
  case md::possibility: return I == (A || Y);
  case md::non_necessity: return O == (E || Y);
  default: return U == (A || E);
  }
}

/// Outcome of validating a modality assignment against the hexagon.
///
/// An assignment is hexagon-consistent when every opposition edge holds and
/// every defining equivalence of the modality table holds. The binary edges
/// alone admit one spurious assignment ({I,O,U} true, the rest false) that
/// corresponds to no verdict; the equivalences exclude it.
struct hexagon_report {
  std::vector<opposition_relation> violated_relations;
  std::vector<modality> violated_equivalences;

  bool ok() const {
    return violated_relations.empty() && violated_equivalences.empty();
  }
  bool contains(const opposition_relation& r) const {
    for (const auto& v : violated_relations)
      if (v == r) return true;
    return false;
  }
};

inline hexagon_report check_hexagon(const modality_assignment& a) {
  hexagon_report report;
  for (const auto& edge : hexagon_relations())
    if (!edge.satisfied_by(a)) report.violated_relations.push_back(edge);
  for (modality m : all_modalities)
    if (!equivalence_holds(m, a)) report.violated_equivalences.push_back(m);
  return report;
}

/// The verdict realizing an assignment, if any. Exactly three of the 64
/// assignments are realizable, one per verdict.
inline std::optional<verdict> verdict_of(const modality_assignment& a) {
  for (verdict v : all_verdicts)
    if (a == modalities_of(v)) return v;
  return std::nullopt;
}

} // namespace credal
