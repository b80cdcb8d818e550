// Apache License, Version 2.0, refer to LICENSE.txt
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "credal/render.hpp"
#include "credal/runner.hpp"
#include "credal/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 2;
constexpr int exit_config_error = 3;
constexpr int exit_evaluation_error = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file)
    throw credal::config_error("could not open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

credal::json parse_json_input(const std::string& path) {
  try {
    return credal::json::parse(read_input(path));
  } catch (const credal::json::parse_error& e) {
    throw credal::config_error(std::string("config is not valid JSON: ") +
                               e.what());
  }
}

struct run_options {
  std::string config_path = "-";
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<double> loss_a, loss_b, c1, c2;
  std::optional<double> cutoff_c;
  bool two_valued = false;
  std::optional<double> tie_tolerance;
  std::string reference;
};

/// Command-line flags override the config file's test spec and output.
credal::json apply_overrides(credal::json config, const run_options& opt) {
  const bool loss_given = opt.loss_a || opt.loss_b;
  const bool cuts_given = opt.c1 || opt.c2;
  const bool ev_given = opt.cutoff_c.has_value();
  if (loss_given + cuts_given + ev_given > 1)
    throw credal::config_error(
        "choose one of --loss-a/--loss-b, --c1/--c2, or --cutoff-c");
  if (loss_given) {
    if (!opt.loss_a || !opt.loss_b)
      throw credal::config_error("--loss-a and --loss-b go together");
    config["test"] = {{"type", "cutoff"}, {"loss_a", *opt.loss_a},
                      {"loss_b", *opt.loss_b}};
  } else if (cuts_given) {
    if (!opt.c1 || !opt.c2)
      throw credal::config_error("--c1 and --c2 go together");
    config["test"] = {{"type", "cutoff"}, {"c1", *opt.c1}, {"c2", *opt.c2}};
  } else if (ev_given) {
    credal::json test = {{"type", opt.two_valued ? "fbst" : "gfbst"},
                         {"c", *opt.cutoff_c}};
    if (!opt.two_valued) {
      if (opt.tie_tolerance) test["tie_tolerance"] = *opt.tie_tolerance;
      if (!opt.reference.empty()) test["reference"] = opt.reference;
    }
    config["test"] = test;
  }
  if (!opt.output.empty()) config["output"] = opt.output;
  if (opt.seed) config["seed"] = *opt.seed;
  return config;
}

int do_run(const run_options& opt) {
  const auto config_json = apply_overrides(parse_json_input(opt.config_path), opt);
  const auto config = credal::parse_run_config(config_json);
  const auto report = credal::run(config);
  switch (config.output) {
  case credal::output_format::json_lines:
    std::cout << credal::run_report_to_json(report).dump(2) << "\n";
    break;
  case credal::output_format::svg:
    std::cout << credal::run_report_to_svg(report);
    break;
  case credal::output_format::text:
    std::cout << credal::run_report_to_text(report);
    break;
  }
  return exit_ok;
}

int do_check(const std::string& path, const std::string& output,
             std::optional<std::uint64_t> seed) {
  auto config_json = parse_json_input(path);
  if (!output.empty()) config_json["output"] = output;
  if (seed) config_json["seed"] = *seed;
  const auto config = credal::parse_run_config(config_json);
  const auto outcome = credal::check(config);
  if (config.output == credal::output_format::json_lines)
    std::cout << credal::consistency_report_to_json(outcome.report, outcome.grid)
                     .dump(2)
              << "\n";
  else
    std::cout << credal::consistency_report_to_text(outcome.report, outcome.grid);
  return outcome.report.overall ? exit_ok : exit_inconsistent;
}

int do_demo(std::optional<double> c2, std::optional<double> loss_a,
            std::optional<double> loss_b, std::size_t parts,
            const std::string& output, std::uint64_t seed) {
  std::optional<credal::cutoff_pair> cuts;
  if (c2) {
    if (loss_a || loss_b)
      throw credal::config_error("--c2 excludes --loss-a/--loss-b");
    cuts.emplace(1.0 - *c2, *c2);
  } else {
    if (!loss_a || !loss_b)
      throw credal::config_error("give --c2 or both --loss-a and --loss-b");
    cuts = credal::cutoffs_from_loss(credal::loss_spec(*loss_a, *loss_b));
  }
  const auto outcome = credal::demo_consonance_failure(*cuts, parts, seed);
  if (output == "json")
    std::cout << credal::demo_outcome_to_json(outcome).dump(2) << "\n";
  else
    std::cout << credal::demo_outcome_to_text(outcome);
  return exit_ok;
}

int do_hexagon(const std::string& verdict_name, const std::string& style_name,
               const std::string& label, const std::string& format,
               const std::string& inner_verdict) {
  const auto v = credal::parse_verdict(verdict_name);
  if (!v)
    throw credal::config_error("unknown verdict '" + verdict_name + "'");

  if (!inner_verdict.empty()) {
    const auto iv = credal::parse_verdict(inner_verdict);
    if (!iv)
      throw credal::config_error("unknown verdict '" + inner_verdict + "'");
    const auto outer = credal::hexagon_state_of(
        *v, label, credal::modality_style::alethic);
    const auto inner = credal::hexagon_state_of(
        *iv, label + "+", credal::modality_style::probabilistic);
    std::cout << (format == "svg" ? credal::render_nested_svg(outer, inner)
                                  : credal::render_nested_ascii(outer, inner));
    return exit_ok;
  }

  const auto style = style_name == "probabilistic"
                         ? credal::modality_style::probabilistic
                         : credal::modality_style::alethic;
  const auto state = credal::hexagon_state_of(*v, label, style);
  std::cout << (format == "svg" ? credal::render_hexagon_svg(state)
                                : credal::render_hexagon_ascii(state));
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"agnostic (three-valued) hypothesis tests over finite parameter "
               "grids: posterior cutoff tests, FBST/GFBST e-value tests, "
               "region tests, and a logical-consistency checker"};
  app.require_subcommand(1);

  run_options ropt;
  auto* run_cmd = app.add_subcommand(
      "run", "evaluate configured hypotheses and report verdicts");
  run_cmd->add_option("config", ropt.config_path,
                      "config file path, or - for stdin");
  run_cmd->add_option("--output", ropt.output, "text, json, or svg");
  run_cmd->add_option("--seed", ropt.seed, "sampler seed");
  run_cmd->add_option("--loss-a", ropt.loss_a, "type-1 error loss");
  run_cmd->add_option("--loss-b", ropt.loss_b, "agnosticity loss");
  run_cmd->add_option("--c1", ropt.c1, "upper posterior cutoff");
  run_cmd->add_option("--c2", ropt.c2, "lower posterior cutoff");
  run_cmd->add_option("--cutoff-c", ropt.cutoff_c, "e-value cutoff");
  run_cmd->add_flag("--fbst", ropt.two_valued,
                    "use the two-valued significance test with --cutoff-c");
  run_cmd->add_option("--tie-tolerance", ropt.tie_tolerance,
                      "surprise tie tolerance");
  run_cmd->add_option("--reference", ropt.reference, "uniform or from-grid");

  std::string check_path = "-";
  std::string check_output;
  std::optional<std::uint64_t> check_seed;
  auto* check_cmd = app.add_subcommand(
      "check", "classify the configured test against the consistency conditions");
  check_cmd->add_option("config", check_path, "config file path, or - for stdin");
  check_cmd->add_option("--output", check_output, "text or json");
  check_cmd->add_option("--seed", check_seed, "sampler seed");

  auto* demo_cmd = app.add_subcommand("demo", "built-in demonstrations");
  demo_cmd->require_subcommand(1);
  std::optional<double> demo_c2, demo_loss_a, demo_loss_b;
  std::size_t demo_parts = 5;
  std::string demo_output = "text";
  std::uint64_t demo_seed = 0;
  auto* demo_failure = demo_cmd->add_subcommand(
      "consonance-failure",
      "partition the parameter space so the cutoff test breaks consonance");
  demo_failure->add_option("--c2", demo_c2,
                           "lower cutoff (the upper becomes 1 - c2)");
  demo_failure->add_option("--loss-a", demo_loss_a, "type-1 error loss");
  demo_failure->add_option("--loss-b", demo_loss_b, "agnosticity loss");
  demo_failure->add_option("--n", demo_parts, "number of partition parts");
  demo_failure->add_option("--output", demo_output, "text or json");
  demo_failure->add_option("--seed", demo_seed, "sampler seed");

  std::string hex_verdict, hex_style = "alethic", hex_label = "H";
  std::string hex_format = "ascii", hex_inner;
  auto* hex_cmd = app.add_subcommand("hexagon",
                                     "render a hexagon of oppositions state");
  hex_cmd->add_option("--verdict", hex_verdict, "accept, agnostic, or reject")
      ->required();
  hex_cmd->add_option("--style", hex_style, "alethic or probabilistic");
  hex_cmd->add_option("--label", hex_label, "hypothesis label");
  hex_cmd->add_option("--format", hex_format, "ascii or svg");
  hex_cmd->add_option("--nested-inner", hex_inner,
                      "verdict of the nested probabilistic test; renders the "
                      "nested hexagon pair");

  auto* version_cmd = app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config_error;
  }

  try {
    if (run_cmd->parsed()) return do_run(ropt);
    if (check_cmd->parsed()) return do_check(check_path, check_output, check_seed);
    if (demo_cmd->parsed() && demo_failure->parsed())
      return do_demo(demo_c2, demo_loss_a, demo_loss_b, demo_parts, demo_output,
                     demo_seed);
    if (hex_cmd->parsed())
      return do_hexagon(hex_verdict, hex_style, hex_label, hex_format, hex_inner);
    if (version_cmd->parsed()) {
      std::cout << credal::library_name << " " << credal::library_version << "\n";
      return exit_ok;
    }
  } catch (const credal::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const credal::error& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return exit_evaluation_error;
  }
  return exit_config_error;
}
