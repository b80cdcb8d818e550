// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "credal/errors.hpp"
#include "credal/modality.hpp"

namespace credal {

/// Which glyph family a hexagon is drawn with: plain modal symbols for
/// possibilistic (alethic) modalities, plus-marked symbols for the
/// probabilistic ones.
enum class modality_style { alethic, probabilistic };

constexpr std::string_view modality_style_name(modality_style s) {
  return s == modality_style::alethic ? "alethic" : "probabilistic";
}

/// One hypothesis' truth values over the six modalities, ready to draw.
struct hexagon_state {
  std::string label;
  modality_assignment truth;
  modality_style style = modality_style::alethic;
};

inline hexagon_state hexagon_state_of(verdict v, std::string label,
                                      modality_style style = modality_style::alethic) {
  return {std::move(label), modalities_of(v), style};
}

namespace detail {

inline void require_consistent(const hexagon_state& state) {
  const auto report = check_hexagon(state.truth);
  if (!report.ok()) {
    std::string what = "inconsistent hexagon state";
    if (!state.label.empty()) what += " for " + state.label;
    if (!report.violated_relations.empty())
      what += ": violates " + report.violated_relations.front().to_string();
    else
      what += ": violates a defining equivalence";
    throw evaluation_error(what);
  }
}

inline std::string vertex_token(const hexagon_state& state, modality m) {
  std::string letter(1, modality_letter(m));
  if (state.style == modality_style::probabilistic) letter += '+';
  return state.truth[m] ? "*" + letter + "*" : " " + letter + " ";
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct point2 {
  double x;
  double y;
};

/// Vertex positions: U top, A upper-left, E upper-right, I lower-left,
/// O lower-right, Y bottom.
inline point2 vertex_position(modality m, point2 center, double radius) {
  const double dx = radius * 0.8660254037844386;  // sin 60
  switch (m) {
  case modality::non_contingency: return {center.x, center.y - radius};
  case modality::necessity: return {center.x - dx, center.y - radius / 2};
  case modality::impossibility: return {center.x + dx, center.y - radius / 2};
  case modality::possibility: return {center.x - dx, center.y + radius / 2};
  case modality::non_necessity: return {center.x + dx, center.y + radius / 2};
  default: return {center.x, center.y + radius};  // contingency
  }
}

inline void append_svg_edge(std::string& svg, point2 a, point2 b,
                            relation_kind kind, double vertex_gap) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::sqrt(dx * dx + dy * dy);
  const double ux = dx / len;
  const double uy = dy / len;
  const point2 start{a.x + ux * vertex_gap, a.y + uy * vertex_gap};
  const point2 end{b.x - ux * vertex_gap, b.y - uy * vertex_gap};

  auto line = [&](point2 s, point2 e, const std::string& extra) {
    svg += "  <line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(s.y) + "\" x2=\"" +
           fmt(e.x) + "\" y2=\"" + fmt(e.y) + "\" stroke=\"#444444\" " +
           extra + "/>\n";
  };

  switch (kind) {
  case relation_kind::implication:
    line(start, end, "stroke-width=\"1.6\" marker-end=\"url(#arrow)\"");
    break;
  case relation_kind::contrariety:
    line(start, end, "stroke-width=\"1.4\" stroke-dasharray=\"8 4\"");
    break;
  case relation_kind::subcontrariety:
    line(start, end, "stroke-width=\"1.4\" stroke-dasharray=\"2 4\"");
    break;
  case relation_kind::contradiction: {
    // Two parallel strokes.
    const double ox = -uy * 2.0;
    const double oy = ux * 2.0;
    line({start.x + ox, start.y + oy}, {end.x + ox, end.y + oy},
         "stroke-width=\"1.1\"");
    line({start.x - ox, start.y - oy}, {end.x - ox, end.y - oy},
         "stroke-width=\"1.1\"");
    break;
  }
  }
}

inline void append_svg_hexagon(std::string& svg, const hexagon_state& state,
                               point2 center, double radius) {
  for (const auto& edge : hexagon_relations())
    append_svg_edge(svg, vertex_position(edge.first, center, radius),
                    vertex_position(edge.second, center, radius), edge.kind,
                    radius * 0.15);
  for (modality m : all_modalities) {
    const point2 p = vertex_position(m, center, radius);
    const bool on = state.truth[m];
    svg += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" +
           fmt(radius * 0.12) + "\" fill=\"" +
           (on ? "#ffd24d" : "#ffffff") + "\" stroke=\"#333333\" stroke-width=\"1.4\"/>\n";
    std::string label(1, modality_letter(m));
    if (state.style == modality_style::probabilistic) label += "+";
    svg += "  <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y + radius * 0.045) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"" +
           fmt(radius * 0.13) + "\"" + (on ? " font-weight=\"bold\"" : "") +
           ">" + label + "</text>\n";
  }
}

inline std::string svg_header(double width, double height) {
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) +
         " " + fmt(height) + "\">\n";
  svg += "  <defs>\n"
         "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
         "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444444\"/>\n"
         "    </marker>\n"
         "  </defs>\n";
  return svg;
}

} // namespace detail

/// Fixed ASCII layout. The six perimeter implication arrows are drawn; the
/// interior triangles and diagonals are listed in the legend.
inline std::string render_hexagon_ascii(const hexagon_state& state) {
  detail::require_consistent(state);
  const auto t = [&](modality m) { return detail::vertex_token(state, m); };

  std::string out;
  if (!state.label.empty())
    out += "hexagon (" + std::string(modality_style_name(state.style)) + ") for " +
           state.label + "\n";
  out += "\n";
  out += "            " + t(modality::non_contingency) + "\n";
  out += "           ^       ^\n";
  out += "          /         \\\n";
  out += "      " + t(modality::necessity) + "           " + t(modality::impossibility) + "\n";
  out += "        |             |\n";
  out += "        v             v\n";
  out += "      " + t(modality::possibility) + "           " + t(modality::non_necessity) + "\n";
  out += "          ^         ^\n";
  out += "           \\       /\n";
  out += "            " + t(modality::contingency) + "\n";
  out += "\n";
  out += "  implication    : A->I  A->U  E->O  E->U  Y->I  Y->O\n";
  out += "  contrariety    : A~E   A~Y   E~Y    (never both true)\n";
  out += "  subcontrariety : I..O  I..U  O..U   (never both false)\n";
  out += "  contradiction  : A==O  E==I  U==Y   (exactly one true)\n";
  out += "\n  true:";
  for (modality m : all_modalities)
    if (state.truth[m]) {
      out += ' ';
      out += modality_letter(m);
      if (state.style == modality_style::probabilistic) out += '+';
    }
  out += "\n";
  return out;
}

/// Byte-deterministic standalone SVG for one hexagon state.
inline std::string render_hexagon_svg(const hexagon_state& state) {
  detail::require_consistent(state);
  std::string svg = detail::svg_header(420, 460);
  if (!state.label.empty())
    svg += "  <text x=\"210.00\" y=\"24.00\" text-anchor=\"middle\" "
           "font-family=\"monospace\" font-size=\"16.00\">" +
           state.label + "</text>\n";
  detail::append_svg_hexagon(svg, state, {210, 245}, 170);
  svg += "</svg>\n";
  return svg;
}

/// Nested drawing: the probabilistic hexagon inside the possibilistic one,
/// joined by the four bridging implications (necessity flows outside-in,
/// possibility flows inside-out). Both states must be hexagon-consistent and
/// jointly satisfy the bridges.
inline std::string render_nested_svg(const hexagon_state& outer,
                                     const hexagon_state& inner) {
  detail::require_consistent(outer);
  detail::require_consistent(inner);
  using m = modality;
  if (outer.truth[m::necessity] && !inner.truth[m::necessity])
    throw evaluation_error(
        "nested-hexagon violation: outer necessity without inner necessity");
  if (inner.truth[m::possibility] && !outer.truth[m::possibility])
    throw evaluation_error(
        "nested-hexagon violation: inner possibility without outer possibility");

  const detail::point2 center{260, 300};
  std::string svg = detail::svg_header(520, 600);
  if (!outer.label.empty())
    svg += "  <text x=\"260.00\" y=\"26.00\" text-anchor=\"middle\" "
           "font-family=\"monospace\" font-size=\"16.00\">" +
           outer.label + "</text>\n";
  detail::append_svg_hexagon(svg, outer, center, 240);
  detail::append_svg_hexagon(svg, inner, center, 110);

  // Bridges: A_outer -> A_inner, E_outer -> E_inner,
  //          I_inner -> I_outer, O_inner -> O_outer.
  const std::array<std::pair<m, bool>, 4> bridges = {
      std::pair<m, bool>{m::necessity, true},
      {m::impossibility, true},
      {m::possibility, false},
      {m::non_necessity, false},
  };
  for (const auto& [vertex, outside_in] : bridges) {
    const auto from =
        detail::vertex_position(vertex, center, outside_in ? 240.0 : 110.0);
    const auto to =
        detail::vertex_position(vertex, center, outside_in ? 110.0 : 240.0);
    detail::append_svg_edge(svg, from, to, relation_kind::implication, 30.0);
  }
  svg += "</svg>\n";
  return svg;
}

inline std::string render_nested_ascii(const hexagon_state& outer,
                                       const hexagon_state& inner) {
  // Reuse the SVG validation path, then print both hexagons with the bridges.
  detail::require_consistent(outer);
  detail::require_consistent(inner);
  using m = modality;
  if (outer.truth[m::necessity] && !inner.truth[m::necessity])
    throw evaluation_error(
        "nested-hexagon violation: outer necessity without inner necessity");
  if (inner.truth[m::possibility] && !outer.truth[m::possibility])
    throw evaluation_error(
        "nested-hexagon violation: inner possibility without outer possibility");

  std::string out = "outer ";
  out += render_hexagon_ascii(outer);
  out += "\ninner ";
  out += render_hexagon_ascii(inner);
  out += "\n  bridges: A->A+  E->E+  I+->I  O+->O\n";
  return out;
}

} // namespace credal
