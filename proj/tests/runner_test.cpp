// Apache License, Version 2.0, refer to LICENSE.txt
#include "doctest.h"

#include "credal/runner.hpp"

using namespace credal;

namespace {

json g3_config_json(json test) {
  json grid_points = json::array();
  for (const char* id : {"theta1", "theta2", "theta3"})
    grid_points.push_back(
        {{"id", id}, {"prior", 1.0 / 3.0}, {"reference", 1.0 / 3.0}});
  return json{
      {"model",
       {{"family", "tabular"},
        {"grid", {{"points", grid_points}}},
        {"likelihood", {{"x", {0.5, 0.3, 0.2}}}}}},
      {"observation", "x"},
      {"test", std::move(test)},
      {"hypotheses",
       json::array({json::array({"theta3"}),
                     json::array({"theta1", "theta2"}),
                     json::array({"theta2"})})},
      {"output", "json"},
  };
}

} // namespace

TEST_CASE("config parsing accepts the documented schema") {
  const auto config =
      parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}}));
  CHECK(config.observation == "x");
  CHECK(config.hypotheses.size() == 3);
  CHECK(config.output == output_format::json_lines);
  CHECK(std::holds_alternative<gfbst_spec>(config.test));
}

TEST_CASE("config parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_run_config(json::array()), config_error);
  CHECK_THROWS_AS(parse_run_config(json{{"model", 1}}), config_error);
  auto missing_test = g3_config_json({{"type", "gfbst"}, {"c", 0.25}});
  missing_test.erase("test");
  CHECK_THROWS_AS(parse_run_config(missing_test), config_error);

  auto bad_type = g3_config_json({{"type", "mystery"}});
  CHECK_THROWS_AS(parse_run_config(bad_type), config_error);

  auto both_specs = g3_config_json(
      {{"type", "cutoff"}, {"loss_a", 1.0}, {"loss_b", 0.25}, {"c1", 0.8},
       {"c2", 0.1}});
  CHECK_THROWS_AS(parse_run_config(both_specs), config_error);

  auto bad_hyp = g3_config_json({{"type", "gfbst"}, {"c", 0.25}});
  bad_hyp["hypotheses"] = json::array({42});
  CHECK_THROWS_AS(parse_run_config(bad_hyp), config_error);

  auto bad_output = g3_config_json({{"type", "gfbst"}, {"c", 0.25}});
  bad_output["output"] = "pdf";
  CHECK_THROWS_AS(parse_run_config(bad_output), config_error);
}

TEST_CASE("gfbst run reproduces the fixture table") {
  const auto config =
      parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}}));
  const auto report = run(config);

  REQUIRE(report.rows.size() == 3);
  CHECK(report.posterior_masses == std::vector<double>{0.5, 0.3, 0.2});

  CHECK(report.rows[0].v == verdict::reject);
  CHECK(*report.rows[0].ev_value == 1.0 - (0.5 + 0.3));
  CHECK(*report.rows[0].ev_complement == 1.0);

  CHECK(report.rows[1].v == verdict::accept);
  CHECK(*report.rows[1].ev_value == 1.0);
  CHECK(*report.rows[1].ev_complement == 1.0 - (0.5 + 0.3));

  CHECK(report.rows[2].v == verdict::agnostic);
  CHECK(*report.rows[2].ev_value == 0.5);
  CHECK(*report.rows[2].ev_complement == 1.0);

  const auto j = run_report_to_json(report);
  CHECK(j["results"][0]["verdict"] == "reject");
  CHECK(j["results"][1]["verdict"] == "accept");
  CHECK(j["results"][2]["verdict"] == "agnostic");
  CHECK(j["results"][0]["tangent_set"] ==
        json::array({"theta1", "theta2"}));
  CHECK(j["results"][0]["modalities"]["E"] == true);
}

TEST_CASE("cutoff run from losses matches the fixture verdicts") {
  const auto config = parse_run_config(g3_config_json(
      {{"type", "cutoff"}, {"loss_a", 1.0}, {"loss_b", 0.25}}));
  const auto report = run(config);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].v == verdict::reject);
  CHECK(report.rows[1].v == verdict::accept);
  CHECK(report.rows[2].v == verdict::agnostic);
  CHECK(report.style == modality_style::probabilistic);
  REQUIRE(report.rows[0].losses.has_value());
  CHECK(report.rows[0].losses->agnostic == 0.25);
  CHECK(report.test_echo["c1"] == 0.75);
  CHECK(report.test_echo["c2"] == 0.25);
}

TEST_CASE("fbst and region runs") {
  const auto fbst_report =
      run(parse_run_config(g3_config_json({{"type", "fbst"}, {"c", 0.25}})));
  CHECK(fbst_report.rows[0].v == verdict::reject);
  CHECK(fbst_report.rows[1].v == verdict::accept);
  CHECK(fbst_report.rows[2].v == verdict::accept);  // two-valued: 0.5 > 0.25

  const auto region_report = run(parse_run_config(g3_config_json(
      {{"type", "region"}, {"S", json::array({"theta1", "theta2"})}})));
  CHECK(region_report.rows[0].v == verdict::reject);
  CHECK(region_report.rows[1].v == verdict::accept);
  CHECK(region_report.rows[2].v == verdict::agnostic);
}

TEST_CASE("predicate hypotheses resolve against grid coordinates") {
  json grid_points = json::array();
  int i = 0;
  for (const char* id : {"a", "b", "c"}) {
    grid_points.push_back({{"id", id},
                           {"coord", {static_cast<double>(i) / 2.0}},
                           {"prior", 1.0 / 3.0}});
    ++i;
  }
  const json config_json{
      {"model",
       {{"family", "tabular"},
        {"grid", {{"points", grid_points}}},
        {"likelihood", {{"x", {0.5, 0.3, 0.2}}}}}},
      {"observation", "x"},
      {"test", {{"type", "gfbst"}, {"c", 0.25}}},
      {"hypotheses", json::array({"x0 <= 0.5", "x0 == 1"})},
  };
  const auto report = run(parse_run_config(config_json));
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].hyp == hypothesis::of(3, {0, 1}));
  CHECK(report.rows[1].hyp == hypothesis::of(3, {2}));
  CHECK(*report.rows[0].predicate == "x0 <= 0.5");
  const auto j = run_report_to_json(report);
  CHECK(j["results"][0]["predicate"] == "x0 <= 0.5");
}

TEST_CASE("a cutoff list sweeps the verdict table once per value") {
  const auto config = parse_run_config(
      g3_config_json({{"type", "gfbst"}, {"c", {0.1, 0.25, 0.75}}}));
  const auto report = run(config);
  REQUIRE(report.rows.size() == 9);  // 3 cutoffs x 3 hypotheses
  CHECK(*report.rows[0].cutoff_used == 0.1);
  CHECK(*report.rows[8].cutoff_used == 0.75);
  // {theta3}: ev just below 0.2 stays possible at c = 0.1, not at c = 0.25.
  CHECK(report.rows[0].v == verdict::agnostic);
  CHECK(report.rows[3].v == verdict::reject);
  // {theta1,theta2}: its complement's e-value (~0.2) blocks acceptance only
  // at the lowest cutoff.
  CHECK(report.rows[1].v == verdict::agnostic);
  CHECK(report.rows[4].v == verdict::accept);
  CHECK(report.rows[7].v == verdict::accept);
  // {theta2}: e-value 0.5 falls at the highest cutoff.
  CHECK(report.rows[5].v == verdict::agnostic);
  CHECK(report.rows[8].v == verdict::reject);
  const auto j = run_report_to_json(report);
  CHECK(j["results"][0]["c"] == 0.1);
  CHECK(j["test"]["c"] == json::array({0.1, 0.25, 0.75}));

  // A sweep cannot be classified.
  CHECK_THROWS_AS(check(config), config_error);
  // Single cutoffs keep the scalar echo and omit the per-row field.
  const auto single =
      run(parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}})));
  CHECK(!single.rows[0].cutoff_used.has_value());
}

TEST_CASE("an empty hypothesis list produces a report with zero rows") {
  auto config_json = g3_config_json({{"type", "gfbst"}, {"c", 0.25}});
  config_json["hypotheses"] = json::array();
  const auto report = run(parse_run_config(config_json));
  CHECK(report.rows.empty());
  CHECK(run_report_to_json(report)["results"] == json::array());

  auto no_list = g3_config_json({{"type", "gfbst"}, {"c", 0.25}});
  no_list.erase("hypotheses");
  CHECK(run(parse_run_config(no_list)).rows.empty());
}

TEST_CASE("check classifies an explicit region spec as consistent") {
  const auto outcome = check(parse_run_config(g3_config_json(
      {{"type", "region"}, {"S", json::array({"theta1"})}})));
  CHECK(outcome.report.overall);
}

TEST_CASE("json report round-trips byte-identically") {
  const auto config =
      parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}}));
  const auto dumped = run_report_to_json(run(config)).dump(2);
  CHECK(json::parse(dumped).dump(2) == dumped);
  // Re-running produces the same bytes.
  CHECK(run_report_to_json(run(config)).dump(2) == dumped);
}

TEST_CASE("check outcome and report serialization") {
  const auto pass_outcome = check(
      parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}})));
  CHECK(pass_outcome.report.overall);
  const auto pass_json =
      consistency_report_to_json(pass_outcome.report, pass_outcome.grid);
  CHECK(pass_json["overall"] == true);
  CHECK(pass_json["mode"] == "exhaustive");

  // Five-point uniform cutoff test fails; counterexamples serialize.
  json grid_points = json::array();
  for (int i = 1; i <= 5; ++i)
    grid_points.push_back(
        {{"id", "theta" + std::to_string(i)}, {"prior", 0.2}});
  const json config_json{
      {"model",
       {{"family", "tabular"},
        {"grid", {{"points", grid_points}}},
        {"likelihood", {{"x", {1.0, 1.0, 1.0, 1.0, 1.0}}}}}},
      {"observation", "x"},
      {"test", {{"type", "cutoff"}, {"c1", 0.75}, {"c2", 0.25}}},
  };
  const auto fail_outcome = check(parse_run_config(config_json));
  CHECK(!fail_outcome.report.overall);
  const auto fail_json =
      consistency_report_to_json(fail_outcome.report, fail_outcome.grid);
  CHECK(fail_json["overall"] == false);
  CHECK(fail_json["union_consonance"]["pass"] == false);
  REQUIRE(fail_json["union_consonance"].contains("counterexample"));
  CHECK(fail_json["union_consonance"]["counterexample"]["hypotheses"].size() ==
        3);
  const auto text =
      consistency_report_to_text(fail_outcome.report, fail_outcome.grid);
  CHECK(text.find("NOT logically consistent") != std::string::npos);
}

TEST_CASE("demo outcome fails both consonances and serializes") {
  const auto outcome = demo_consonance_failure(cutoff_pair(0.75, 0.25), 5);
  CHECK(!outcome.union_result.pass);
  CHECK(!outcome.intersection_result.pass);
  const auto j = demo_outcome_to_json(outcome);
  CHECK(j["parts"] == 5);
  CHECK(j["partition"].size() == 5);
  CHECK(j["whole_space"]["verdict"] == "accept");
  CHECK(j["union_consonance"]["pass"] == false);
  for (const auto& part : j["partition"]) {
    CHECK(part["verdict"] == "reject");
    CHECK(part["posterior_prob"].get<double>() < 0.25);
  }
  const auto text = demo_outcome_to_text(outcome);
  CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("demo detects the failure above the exhaustive pair limit") {
  const auto outcome = demo_consonance_failure(cutoff_pair(0.9, 0.1), 11);
  CHECK(!outcome.union_result.pass);
  CHECK(!outcome.intersection_result.pass);
}

TEST_CASE("svg run report is deterministic and refuses nothing valid") {
  const auto config =
      parse_run_config(g3_config_json({{"type", "gfbst"}, {"c", 0.25}}));
  const auto report = run(config);
  const auto svg = run_report_to_svg(report);
  CHECK(svg == run_report_to_svg(report));
  CHECK(svg.find("reject") != std::string::npos);
  CHECK(svg.find("accept") != std::string::npos);
  CHECK(svg.find("agnostic") != std::string::npos);
}

TEST_CASE("grid serialization round trip") {
  json grid_json = {{"points", json::array({
                        json{{"id", "a"}, {"coord", {0.5}}, {"prior", 0.5},
                             {"reference", 2.0}},
                        json{{"id", "b"}, {"prior", 0.5}},
                    })}};
  const auto grid = parse_grid(grid_json);
  CHECK(grid.size() == 2);
  CHECK(grid.point(0).reference == 2.0);
  CHECK(grid.point(1).reference == 1.0);  // default
  const auto back = grid_to_json(grid);
  CHECK(back["points"][0]["id"] == "a");
  CHECK(back["points"][0]["coord"][0] == 0.5);
  CHECK(parse_grid(back).same_points(grid));

  CHECK_THROWS_AS(parse_grid(json{{"points", "nope"}}), config_error);
  CHECK_THROWS_AS(parse_grid(json::array()), config_error);
}

TEST_CASE("model parsing covers the three families") {
  CHECK_THROWS_AS(parse_model(json{{"family", "unknown"}}), config_error);
  const auto binomial =
      parse_model(json{{"family", "binomial-grid"}, {"resolution", 11}});
  CHECK(binomial.grid().size() == 11);
  const auto bernoulli = parse_model(
      json{{"family", "bernoulli-grid"}, {"thetas", {0.2, 0.8}}});
  CHECK(bernoulli.grid().size() == 2);
  CHECK_THROWS_AS(parse_model(json{{"family", "binomial-grid"}}), config_error);
}
