#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnp/campaign.hpp"
#include "cnp/engine.hpp"

namespace cnp {

struct CliRequest {
  std::optional<CampaignSpec> campaign;
  std::optional<std::string> verify_path;
};

struct ParsedCli {
  std::optional<CliRequest> request;  // empty on parse failure or --help
  int exit_code = 0;
};

// Exit codes: 0 success, 1 usage error, 2 runtime failure.
inline ParsedCli parse_cli(const std::vector<std::string>& args,
                           std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Evolutionary minimization of sorting networks with composite objectives,"
               " novelty selection, and novelty pulsation"};
  app.set_help_flag("-h,--help", "print usage");

  CampaignSpec spec;
  std::vector<std::string> mode_names{std::string(to_string(spec.base.mode))};
  std::string pulse_phase = "off-first";

  app.add_option("--lines", spec.lines_list, "line count(s), comma separated")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--pop", spec.base.population_size, "population size")->capture_default_str();
  app.add_option("--elite-frac", spec.base.elite_fraction, "elite fraction")
      ->capture_default_str();
  app.add_option("--multiplier", spec.base.selection_multiplier,
                 "novelty selection multiplier s, 1 <= s <= 1/elite-frac")
      ->capture_default_str();
  app.add_option("--period", spec.base.pulsation_period, "pulsation period P")
      ->capture_default_str();
  app.add_option("--generations", spec.base.generations, "generation budget")
      ->capture_default_str();
  app.add_option("--mode", mode_names,
                 "mode(s): single, nsga2, composite, composite-novelty, pulsation")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--seed", spec.seeds, "seed(s), comma separated")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--target-comparators", spec.base.target_comparators,
                 "stop once a valid network with at most this many comparators is found");
  app.add_option("--out", spec.out_dir, "output directory for logs and reports")
      ->capture_default_str();
  app.add_option("--pulse-phase", pulse_phase, "pulsation start phase: off-first or on-first")
      ->check(CLI::IsMember({"off-first", "on-first"}))
      ->capture_default_str();
  app.add_option("--p-add", spec.base.p_add, "add-comparator mutation weight")
      ->capture_default_str();
  app.add_option("--p-remove", spec.base.p_remove, "remove-comparator mutation weight")
      ->capture_default_str();
  app.add_option("--p-swap", spec.base.p_swap, "swap-comparators mutation weight")
      ->capture_default_str();
  app.add_option("--p-crossover", spec.base.p_crossover, "crossover probability")
      ->capture_default_str();
  app.add_option("--alpha1", spec.base.params.alpha1, "mistake weight on the layer axis")
      ->capture_default_str();
  app.add_option("--alpha2", spec.base.params.alpha2, "layer weight on the layer axis")
      ->capture_default_str();
  app.add_option("--alpha3", spec.base.params.alpha3, "mistake weight on the comparator axis")
      ->capture_default_str();
  app.add_option("--alpha4", spec.base.params.alpha4, "comparator weight on the comparator axis")
      ->capture_default_str();
  app.add_option("--init-min", spec.base.init_comparators_min,
                 "initial comparator count lower bound (default: lines)");
  app.add_option("--init-max", spec.base.init_comparators_max,
                 "initial comparator count upper bound (default: 4x lines)");

  CLI::App* verify = app.add_subcommand("verify", "evaluate a network file and report m, l, c");
  std::string verify_path;
  verify->add_option("file", verify_path, "network file in the export format")->required();

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, 0};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {std::nullopt, 1};
  }

  if (verify->parsed()) return {CliRequest{std::nullopt, verify_path}, 0};

  spec.base.pulse_on_first = pulse_phase == "on-first";
  spec.modes.clear();
  for (const std::string& name : mode_names) {
    const auto mode = parse_mode(name);
    if (!mode) {
      err << "unknown mode '" << name
          << "' (expected single, nsga2, composite, composite-novelty, pulsation)\n";
      return {std::nullopt, 1};
    }
    spec.modes.push_back(*mode);
  }
  try {
    spec.validate();
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return {std::nullopt, 1};
  }
  return {CliRequest{spec, std::nullopt}, 0};
}

inline ParsedCli parse_cli(int argc, const char* const* argv,
                           std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_cli(args, out, err);
}

}  // namespace cnp
