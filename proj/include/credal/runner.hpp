// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "credal/consistency.hpp"
#include "credal/decisions.hpp"
#include "credal/fbst.hpp"
#include "credal/io.hpp"
#include "credal/predicate.hpp"
#include "credal/render.hpp"

namespace credal {

enum class output_format { text, json_lines, svg };

inline output_format parse_output_format(const std::string& s) {
  if (s == "text") return output_format::text;
  if (s == "json") return output_format::json_lines;
  if (s == "svg") return output_format::svg;
  throw config_error("unknown output format '" + s + "'");
}

enum class reference_choice { from_grid, uniform };

struct cutoff_spec {
  cutoff_pair cuts;
  std::optional<loss_spec> loss;  // present when derived from losses
};

/// E-value tests accept either a single cutoff or a list of cutoffs; a list
/// makes `run` sweep the verdict table once per cutoff value.
struct fbst_spec {
  std::vector<double> cutoffs;
};

struct gfbst_spec {
  std::vector<double> cutoffs;
  double tie_tolerance = 0.0;
  reference_choice reference = reference_choice::from_grid;
};

struct region_spec {
  std::vector<std::string> ids;
};

using test_spec = std::variant<fbst_spec, gfbst_spec, cutoff_spec, region_spec>;

/// A hypothesis is configured either as an explicit id list or as a
/// coordinate predicate string.
struct hypothesis_spec {
  std::vector<std::string> ids;
  std::optional<std::string> predicate;
};

struct run_config {
  json model;
  std::string observation;
  test_spec test;
  std::vector<hypothesis_spec> hypotheses;
  output_format output = output_format::text;
  std::uint64_t seed = 0;
};

inline std::vector<double> detail_parse_cutoffs(const json& j) {
  std::vector<double> cutoffs;
  if (j.is_array()) {
    for (const auto& v : j) cutoffs.push_back(v.get<double>());
  } else {
    cutoffs.push_back(j.get<double>());
  }
  if (cutoffs.empty())
    throw config_error("the cutoff list must not be empty");
  for (double c : cutoffs)
    if (!(c > 0.0 && c < 1.0))
      throw config_error("cutoffs must lie in (0, 1)");
  return cutoffs;
}

inline test_spec parse_test_spec(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw config_error("test spec must be an object with a \"type\" string");
  const std::string type = j["type"].get<std::string>();
  if (type == "cutoff") {
    const bool has_loss = j.contains("loss_a") || j.contains("loss_b");
    const bool has_cuts = j.contains("c1") || j.contains("c2");
    if (has_loss && has_cuts)
      throw config_error("give either loss_a/loss_b or c1/c2, not both");
    if (has_loss) {
      if (!j.contains("loss_a") || !j.contains("loss_b"))
        throw config_error("loss-based cutoff tests need loss_a and loss_b");
      loss_spec loss(j["loss_a"].get<double>(), j["loss_b"].get<double>());
      return cutoff_spec{cutoffs_from_loss(loss), loss};
    }
    if (!j.contains("c1") || !j.contains("c2"))
      throw config_error("cutoff tests need c1 and c2 (or loss_a and loss_b)");
    return cutoff_spec{cutoff_pair(j["c1"].get<double>(), j["c2"].get<double>()),
                       std::nullopt};
  }
  if (type == "fbst") {
    if (!j.contains("c")) throw config_error("fbst tests need a cutoff \"c\"");
    return fbst_spec{detail_parse_cutoffs(j["c"])};
  }
  if (type == "gfbst") {
    if (!j.contains("c")) throw config_error("gfbst tests need a cutoff \"c\"");
    gfbst_spec spec{detail_parse_cutoffs(j["c"])};
    spec.tie_tolerance = j.value("tie_tolerance", 0.0);
    const std::string ref = j.value("reference", "from-grid");
    if (ref == "uniform") spec.reference = reference_choice::uniform;
    else if (ref == "from-grid") spec.reference = reference_choice::from_grid;
    else throw config_error("reference must be \"uniform\" or \"from-grid\"");
    return spec;
  }
  if (type == "region") {
    if (!j.contains("S") || !j["S"].is_array())
      throw config_error("region tests need an id array \"S\"");
    region_spec spec;
    for (const auto& id : j["S"]) spec.ids.push_back(id.get<std::string>());
    return spec;
  }
  throw config_error("unknown test type '" + type + "'");
}

inline run_config parse_run_config(const json& j) {
  if (!j.is_object()) throw config_error("config must be a JSON object");
  run_config config;
  if (!j.contains("model")) throw config_error("config needs a \"model\"");
  config.model = j["model"];
  if (!j.contains("observation") || !j["observation"].is_string())
    throw config_error("config needs a string \"observation\"");
  config.observation = j["observation"].get<std::string>();
  if (!j.contains("test")) throw config_error("config needs a \"test\" spec");
  config.test = parse_test_spec(j["test"]);
  if (j.contains("hypotheses")) {
    if (!j["hypotheses"].is_array())
      throw config_error("\"hypotheses\" must be an array");
    for (const auto& hj : j["hypotheses"]) {
      hypothesis_spec spec;
      if (hj.is_string()) {
        spec.predicate = hj.get<std::string>();
      } else if (hj.is_array()) {
        for (const auto& id : hj) spec.ids.push_back(id.get<std::string>());
      } else {
        throw config_error(
            "each hypothesis is an id array or a predicate string");
      }
      config.hypotheses.push_back(std::move(spec));
    }
  }
  config.output = parse_output_format(j.value("output", "text"));
  config.seed = j.value("seed", std::uint64_t{0});
  return config;
}

inline json test_spec_to_json(const test_spec& spec) {
  json j;
  if (const auto* c = std::get_if<cutoff_spec>(&spec)) {
    j["type"] = "cutoff";
    j["c1"] = c->cuts.upper;
    j["c2"] = c->cuts.lower;
    if (c->loss) {
      j["loss_a"] = c->loss->type1_loss;
      j["loss_b"] = c->loss->agnostic_loss;
    }
  } else if (const auto* f = std::get_if<fbst_spec>(&spec)) {
    j["type"] = "fbst";
    j["c"] = f->cutoffs.size() == 1 ? json(f->cutoffs[0]) : json(f->cutoffs);
  } else if (const auto* g = std::get_if<gfbst_spec>(&spec)) {
    j["type"] = "gfbst";
    j["c"] = g->cutoffs.size() == 1 ? json(g->cutoffs[0]) : json(g->cutoffs);
    j["tie_tolerance"] = g->tie_tolerance;
    j["reference"] =
        g->reference == reference_choice::uniform ? "uniform" : "from-grid";
  } else if (const auto* r = std::get_if<region_spec>(&spec)) {
    j["type"] = "region";
    j["S"] = r->ids;
  }
  return j;
}

struct run_row {
  hypothesis hyp;
  std::optional<std::string> predicate;
  verdict v = verdict::agnostic;
  std::optional<double> cutoff_used;  // set when sweeping several cutoffs
  std::optional<double> ev_value;
  std::optional<double> ev_complement;
  std::optional<hypothesis> tangent;
  std::optional<double> posterior_prob;
  std::optional<expected_losses> losses;
};

struct run_report {
  parameter_grid grid;
  std::string observation;
  std::vector<double> posterior_masses;
  json test_echo;
  modality_style style = modality_style::alethic;
  std::vector<run_row> rows;
};

namespace detail {

inline hypothesis resolve_hypothesis(const parameter_grid& grid,
                                     const hypothesis_spec& spec) {
  if (spec.predicate)
    return hypothesis_from_predicate(grid,
                                     coordinate_predicate::parse(*spec.predicate));
  return hypothesis_from_ids(grid, spec.ids);
}

inline surprise_profile profile_for(const posterior& post,
                                    const gfbst_spec& spec) {
  return spec.reference == reference_choice::uniform
             ? surprise_uniform_reference(post, spec.tie_tolerance)
             : surprise(post, spec.tie_tolerance);
}

} // namespace detail

/// Evaluate every configured hypothesis under the configured test.
inline run_report run(const run_config& config) {
  const discrete_model model = parse_model(config.model);
  const posterior post = compute_posterior(model, config.observation);
  const parameter_grid& grid = post.grid();

  run_report report{grid,
                    config.observation,
                    {post.masses().begin(), post.masses().end()},
                    test_spec_to_json(config.test),
                    modality_style::alethic,
                    {}};

  std::vector<std::pair<hypothesis, std::optional<std::string>>> resolved;
  for (const auto& spec : config.hypotheses)
    resolved.emplace_back(detail::resolve_hypothesis(grid, spec), spec.predicate);

  if (const auto* c = std::get_if<cutoff_spec>(&config.test)) {
    report.style = modality_style::probabilistic;
    for (auto& [h, pred] : resolved) {
      run_row row{h, pred};
      row.posterior_prob = prob(post, h);
      row.v = cutoff_decision(*row.posterior_prob, c->cuts);
      if (c->loss) {
        expected_losses el{};
        bayes_optimal_decision(*row.posterior_prob, *c->loss, &el);
        row.losses = el;
      }
      report.rows.push_back(std::move(row));
    }
  } else if (const auto* f = std::get_if<fbst_spec>(&config.test)) {
    const auto profile = surprise(post);
    const bool sweeping = f->cutoffs.size() > 1;
    for (double cutoff : f->cutoffs) {
      for (auto& [h, pred] : resolved) {
        run_row row{h, pred};
        if (sweeping) row.cutoff_used = cutoff;
        const e_value e = ev(post, profile, h);
        row.ev_value = e.value;
        row.tangent = e.tangent;
        row.posterior_prob = prob(post, h);
        row.v = fbst(post, profile, h, cutoff);
        report.rows.push_back(std::move(row));
      }
    }
  } else if (const auto* g = std::get_if<gfbst_spec>(&config.test)) {
    const auto profile = detail::profile_for(post, *g);
    const bool sweeping = g->cutoffs.size() > 1;
    for (double cutoff : g->cutoffs) {
      const gfbst_config gc(cutoff);
      for (auto& [h, pred] : resolved) {
        run_row row{h, pred};
        if (sweeping) row.cutoff_used = cutoff;
        const e_value e = ev(post, profile, h);
        row.ev_value = e.value;
        row.tangent = e.tangent;
        row.ev_complement = ev(post, profile, h.complement()).value;
        row.posterior_prob = prob(post, h);
        row.v = gfbst(post, profile, h, gc);
        report.rows.push_back(std::move(row));
      }
    }
  } else if (const auto* r = std::get_if<region_spec>(&config.test)) {
    const hypothesis region = hypothesis_from_ids(grid, r->ids);
    for (auto& [h, pred] : resolved) {
      run_row row{h, pred};
      row.posterior_prob = prob(post, h);
      row.v = region_test_evaluate(region, h);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline json run_report_to_json(const run_report& report) {
  json j;
  json grid_ids = json::array();
  for (const auto& p : report.grid.points()) grid_ids.push_back(p.id);
  j["grid"] = std::move(grid_ids);
  j["observation"] = report.observation;
  j["posterior"] = report.posterior_masses;
  j["test"] = report.test_echo;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json rj;
    rj["hypothesis"] = hypothesis_to_json(row.hyp, report.grid);
    if (row.predicate) rj["predicate"] = *row.predicate;
    rj["verdict"] = std::string(verdict_name(row.v));
    rj["verdict_value"] = verdict_value(row.v);
    if (row.cutoff_used) rj["c"] = *row.cutoff_used;
    if (row.ev_value) rj["ev"] = *row.ev_value;
    if (row.ev_complement) rj["ev_complement"] = *row.ev_complement;
    if (row.tangent)
      rj["tangent_set"] = hypothesis_to_json(*row.tangent, report.grid);
    if (row.posterior_prob) rj["posterior_prob"] = *row.posterior_prob;
    if (row.losses) {
      rj["expected_losses"] = json{{"accept", row.losses->accept},
                                   {"agnostic", row.losses->agnostic},
                                   {"reject", row.losses->reject}};
    }
    const auto truth = modalities_of(row.v);
    json mj;
    for (modality m : all_modalities)
      mj[std::string(1, modality_letter(m))] = truth[m];
    rj["modalities"] = std::move(mj);
    rows.push_back(std::move(rj));
  }
  j["results"] = std::move(rows);
  return j;
}

namespace detail {

inline std::string fmt_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

} // namespace detail

inline std::string run_report_to_text(const run_report& report) {
  std::string out;
  out += "grid:";
  for (const auto& p : report.grid.points()) out += " " + p.id;
  out += "\nobservation: " + report.observation + "\nposterior:";
  for (double m : report.posterior_masses) out += " " + detail::fmt_number(m);
  out += "\ntest: " + report.test_echo.dump() + "\n\n";
  for (const auto& row : report.rows) {
    out += row.hyp.to_string(report.grid);
    if (row.predicate) out += "  [" + *row.predicate + "]";
    if (row.cutoff_used) out += "  c=" + detail::fmt_number(*row.cutoff_used);
    out += "  ->  " + std::string(verdict_name(row.v));
    if (row.ev_value) out += "  ev=" + detail::fmt_number(*row.ev_value);
    if (row.ev_complement)
      out += "  ev(~H)=" + detail::fmt_number(*row.ev_complement);
    if (row.posterior_prob)
      out += "  p=" + detail::fmt_number(*row.posterior_prob);
    if (row.losses)
      out += "  losses(accept,agnostic,reject)=(" +
             detail::fmt_number(row.losses->accept) + "," +
             detail::fmt_number(row.losses->agnostic) + "," +
             detail::fmt_number(row.losses->reject) + ")";
    out += "\n";
  }
  return out;
}

/// One hexagon per hypothesis, stacked into a single SVG document.
inline std::string run_report_to_svg(const run_report& report) {
  const double width = 420;
  const double slot = 460;
  const double height =
      report.rows.empty() ? slot : slot * static_cast<double>(report.rows.size());
  std::string svg = detail::svg_header(width, height);
  double offset = 0;
  for (const auto& row : report.rows) {
    const hexagon_state state = hexagon_state_of(
        row.v, row.hyp.to_string(report.grid), report.style);
    detail::require_consistent(state);
    svg += "  <text x=\"210.00\" y=\"" + detail::fmt(offset + 24) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"16.00\">" +
           state.label + " : " + std::string(verdict_name(row.v)) + "</text>\n";
    detail::append_svg_hexagon(svg, state, {210, offset + 245}, 170);
    offset += slot;
  }
  svg += "</svg>\n";
  return svg;
}

struct check_outcome {
  consistency_report report;
  parameter_grid grid;
};

/// Classify the configured test against the five consistency conditions.
inline check_outcome check(const run_config& config) {
  const discrete_model model = parse_model(config.model);
  const posterior post = compute_posterior(model, config.observation);
  sampling_policy policy;
  policy.seed = config.seed;

  agnostic_test test = [&]() -> agnostic_test {
    if (const auto* c = std::get_if<cutoff_spec>(&config.test))
      return build_cutoff_test(post, c->cuts);
    if (const auto* f = std::get_if<fbst_spec>(&config.test)) {
      if (f->cutoffs.size() != 1)
        throw config_error("check needs a single cutoff, not a sweep");
      const auto profile = surprise(post);
      const double cutoff = f->cutoffs.front();
      return agnostic_test::from_rule(
          post.grid(),
          [post, profile, cutoff](const hypothesis& h) {
            return fbst(post, profile, h, cutoff);
          },
          "fbst (cutoff=" + std::to_string(cutoff) + ")");
    }
    if (const auto* g = std::get_if<gfbst_spec>(&config.test)) {
      if (g->cutoffs.size() != 1)
        throw config_error("check needs a single cutoff, not a sweep");
      const auto profile = detail::profile_for(post, *g);
      return make_gfbst_test(post, profile, gfbst_config(g->cutoffs.front()));
    }
    const auto& r = std::get<region_spec>(config.test);
    return agnostic_test::from_region(post.grid(),
                                      hypothesis_from_ids(post.grid(), r.ids));
  }();

  return {classify(test, policy), post.grid()};
}

inline std::string consistency_report_to_text(const consistency_report& report,
                                              const parameter_grid& grid) {
  auto line = [&](const char* name, const check_result& r) {
    std::string s = std::string(name) + ": " + (r.pass ? "pass" : "FAIL");
    if (r.witness) {
      s += "  [" + r.witness->note + ":";
      for (const auto& h : r.witness->hypotheses) s += " " + h.to_string(grid);
      s += " ;";
      for (verdict v : r.witness->verdicts)
        s += " " + std::string(verdict_name(v));
      s += "]";
    }
    return s + "\n";
  };
  std::string out;
  out += line("invertibility          ", report.invertibility);
  out += line("monotonicity           ", report.monotonicity);
  out += line("union consonance       ", report.union_consonance);
  out += line("intersection consonance", report.intersection_consonance);
  out += line("accepts whole space    ", report.accepts_whole_space);
  out += std::string("overall                : ") +
         (report.overall ? "logically consistent" : "NOT logically consistent") +
         "\n";
  out += "mode                   : ";
  out += report.mode == check_mode::exhaustive ? "exhaustive" : "sampled";
  if (report.mode == check_mode::sampled)
    out += " (seed=" + std::to_string(report.seed) +
           ", trials=" + std::to_string(report.trials) + ")";
  out += "\n";
  return out;
}

struct demo_outcome {
  consonance_witness witness;
  check_result union_result;
  check_result intersection_result;
};

/// Build the partition witness and re-run both consonance checks on it.
inline demo_outcome demo_consonance_failure(const cutoff_pair& cuts,
                                            std::size_t parts,
                                            std::uint64_t seed = 0) {
  consonance_witness witness = consonance_failure_witness(cuts, parts);
  const auto test = build_cutoff_test(witness.post, witness.cuts);
  sampling_policy policy;
  policy.seed = seed;
  demo_outcome outcome{std::move(witness), check_union_consonance(test, policy),
                       check_intersection_consonance(test, policy)};
  return outcome;
}

inline json demo_outcome_to_json(const demo_outcome& outcome) {
  const auto& grid = outcome.witness.post.grid();
  json j;
  j["c1"] = outcome.witness.cuts.upper;
  j["c2"] = outcome.witness.cuts.lower;
  j["parts"] = outcome.witness.partition.size();
  json parts = json::array();
  for (const auto& part : outcome.witness.partition) {
    json pj;
    pj["hypothesis"] = hypothesis_to_json(part, grid);
    pj["posterior_prob"] = prob(outcome.witness.post, part);
    pj["verdict"] = std::string(verdict_name(
        cutoff_test(outcome.witness.post, part, outcome.witness.cuts)));
    parts.push_back(std::move(pj));
  }
  j["partition"] = std::move(parts);
  const hypothesis whole = hypothesis::full_set(grid.size());
  j["whole_space"] =
      json{{"posterior_prob", prob(outcome.witness.post, whole)},
           {"verdict", std::string(verdict_name(cutoff_test(
                           outcome.witness.post, whole, outcome.witness.cuts)))}};
  j["union_consonance"] = check_result_to_json(outcome.union_result, grid);
  j["intersection_consonance"] =
      check_result_to_json(outcome.intersection_result, grid);
  return j;
}

inline std::string demo_outcome_to_text(const demo_outcome& outcome) {
  const auto& grid = outcome.witness.post.grid();
  std::string out;
  out += "cutoffs: accept above " + detail::fmt_number(outcome.witness.cuts.upper) +
         ", reject below " + detail::fmt_number(outcome.witness.cuts.lower) + "\n";
  out += "uniform posterior over " + std::to_string(grid.size()) + " points\n\n";
  for (const auto& part : outcome.witness.partition) {
    out += part.to_string(grid) + "  p=" +
           detail::fmt_number(prob(outcome.witness.post, part)) + "  -> " +
           std::string(verdict_name(
               cutoff_test(outcome.witness.post, part, outcome.witness.cuts))) +
           "\n";
  }
  const hypothesis whole = hypothesis::full_set(grid.size());
  out += whole.to_string(grid) + "  p=" +
         detail::fmt_number(prob(outcome.witness.post, whole)) + "  -> " +
         std::string(verdict_name(
             cutoff_test(outcome.witness.post, whole, outcome.witness.cuts))) +
         "\n\n";
  out += "union consonance       : ";
  out += outcome.union_result.pass ? "pass" : "FAIL";
  out += "\nintersection consonance: ";
  out += outcome.intersection_result.pass ? "pass" : "FAIL";
  out += "\n";
  return out;
}

} // namespace credal
