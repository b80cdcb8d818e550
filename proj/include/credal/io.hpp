// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "credal/bayes.hpp"
#include "credal/consistency.hpp"
#include "credal/errors.hpp"
#include "credal/grid.hpp"
#include "credal/hypothesis.hpp"
#include "credal/modality.hpp"

namespace credal {

using json = nlohmann::json;

inline json hypothesis_to_json(const hypothesis& h, const parameter_grid& grid) {
  json ids = json::array();
  for (std::size_t i : h.members()) ids.push_back(grid.point(i).id);
  return ids;
}

inline hypothesis hypothesis_from_ids(const parameter_grid& grid,
                                      const std::vector<std::string>& ids) {
  hypothesis h(grid.size());
  for (const auto& id : ids) {
    const auto index = grid.index_of(id);
    if (!index)
      throw config_error("unknown grid point id '" + id + "'");
    h.add(*index);
  }
  return h;
}

/// Grid file schema:
/// {"points": [{"id": str, "coord": [float...], "prior": float,
///              "reference": float}, ...]}
/// "coord" defaults to [] and "reference" to 1.
inline parameter_grid parse_grid(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw config_error("grid must be an object with a \"points\" array");
  std::vector<grid_point> points;
  for (const auto& pj : j["points"]) {
    grid_point p;
    if (!pj.contains("id") || !pj["id"].is_string())
      throw config_error("every grid point needs a string \"id\"");
    p.id = pj["id"].get<std::string>();
    if (pj.contains("coord")) {
      if (!pj["coord"].is_array())
        throw config_error("\"coord\" must be an array of numbers");
      for (const auto& c : pj["coord"]) p.coord.push_back(c.get<double>());
    }
    if (!pj.contains("prior") || !pj["prior"].is_number())
      throw config_error("every grid point needs a numeric \"prior\"");
    p.prior = pj["prior"].get<double>();
    p.reference = pj.value("reference", 1.0);
    points.push_back(std::move(p));
  }
  return parameter_grid(std::move(points));
}

inline json grid_to_json(const parameter_grid& grid) {
  json points = json::array();
  for (const auto& p : grid.points()) {
    json pj;
    pj["id"] = p.id;
    if (!p.coord.empty()) pj["coord"] = p.coord;
    pj["prior"] = p.prior;
    pj["reference"] = p.reference;
    points.push_back(std::move(pj));
  }
  return json{{"points", std::move(points)}};
}

/// Model schema, by family:
///   {"family": "tabular", "grid": {...}, "likelihood": {"<obs>": [...]}}
///   {"family": "binomial-grid", "resolution": n}
///   {"family": "bernoulli-grid", "thetas": [p0, p1, ...]}
inline discrete_model parse_model(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw config_error("model must be an object with a \"family\" string");
  const std::string family = j["family"].get<std::string>();
  if (family == "tabular") {
    if (!j.contains("grid"))
      throw config_error("tabular models need a \"grid\"");
    if (!j.contains("likelihood") || !j["likelihood"].is_object())
      throw config_error("tabular models need a \"likelihood\" object");
    parameter_grid grid = parse_grid(j["grid"]);
    std::map<std::string, std::vector<double>> table;
    for (const auto& [key, values] : j["likelihood"].items()) {
      if (!values.is_array())
        throw config_error("likelihood rows must be arrays");
      std::vector<double> row;
      for (const auto& v : values) row.push_back(v.get<double>());
      table.emplace(key, std::move(row));
    }
    return make_tabular_model(std::move(grid), std::move(table));
  }
  if (family == "binomial-grid") {
    if (!j.contains("resolution") || !j["resolution"].is_number_integer() ||
        j["resolution"].get<long long>() < 2)
      throw config_error("binomial-grid models need an integer \"resolution\" >= 2");
    return make_binomial_grid_model(j["resolution"].get<std::size_t>());
  }
  if (family == "bernoulli-grid") {
    if (!j.contains("thetas") || !j["thetas"].is_array())
      throw config_error("bernoulli-grid models need a \"thetas\" array");
    std::vector<double> thetas;
    for (const auto& v : j["thetas"]) thetas.push_back(v.get<double>());
    return make_bernoulli_grid_model(std::move(thetas));
  }
  throw config_error("unknown model family '" + family + "'");
}

inline json check_result_to_json(const check_result& result,
                                 const parameter_grid& grid) {
  json j;
  j["pass"] = result.pass;
  if (result.witness) {
    json ce;
    ce["note"] = result.witness->note;
    json hyps = json::array();
    for (const auto& h : result.witness->hypotheses)
      hyps.push_back(hypothesis_to_json(h, grid));
    ce["hypotheses"] = std::move(hyps);
    json verdicts = json::array();
    for (verdict v : result.witness->verdicts)
      verdicts.push_back(std::string(verdict_name(v)));
    ce["verdicts"] = std::move(verdicts);
    j["counterexample"] = std::move(ce);
  }
  return j;
}

inline json consistency_report_to_json(const consistency_report& report,
                                       const parameter_grid& grid) {
  json j;
  j["invertibility"] = check_result_to_json(report.invertibility, grid);
  j["monotonicity"] = check_result_to_json(report.monotonicity, grid);
  j["union_consonance"] = check_result_to_json(report.union_consonance, grid);
  j["intersection_consonance"] =
      check_result_to_json(report.intersection_consonance, grid);
  j["accepts_whole_space"] =
      check_result_to_json(report.accepts_whole_space, grid);
  j["overall"] = report.overall;
  j["mode"] = report.mode == check_mode::exhaustive ? "exhaustive" : "sampled";
  if (report.mode == check_mode::sampled) {
    j["seed"] = report.seed;
    j["trials"] = report.trials;
  }
  return j;
}

} // namespace credal
