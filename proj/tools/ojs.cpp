// SPDX-License-Identifier: Apache-2.0
//
// Command line driver for jammer-selection experiments. Each subcommand
// loads a flat key = value config, applies any overrides given here, runs
// the experiment, and writes CSV output plus a .meta sidecar that echoes the
// fully resolved configuration.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ojs/errors.hpp"
#include "ojs/experiment.hpp"
#include "ojs/version.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool trials_set = false;
  std::string out;
  bool greedy = false;
  int workers = 0;
  bool workers_set = false;
};

ojs::ExperimentSpec resolve_spec(const CliOverrides& cli, ojs::ExperimentMode mode) {
  ojs::ExperimentSpec spec = ojs::load_spec(cli.config_path);
  spec.mode = mode;
  if (cli.seed_set) spec.seed = cli.seed;
  if (cli.trials_set) spec.trials = cli.trials;
  if (cli.workers_set) spec.workers = cli.workers;
  if (cli.greedy) spec.greedy = true;
  spec.output_path =
      cli.out.empty() ? std::string(ojs::mode_name(mode)) + ".csv" : cli.out;
  return spec;
}

std::string summary_path(const std::string& primary) {
  const std::filesystem::path p(primary);
  std::filesystem::path out = p.parent_path();
  out /= p.stem().string() + "_summary" + p.extension().string();
  return out.string();
}

std::string fmt_slope(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

void append_dof_extras(const std::vector<ojs::SchemeDof>& dof,
                       std::vector<std::pair<std::string, std::string>>& extras) {
  for (const auto& d : dof) {
    const std::string prefix = "dof_" + std::string(ojs::scheme_name(d.scheme));
    extras.emplace_back(prefix + "_r_bob", fmt_slope(d.r_bob.slope));
    extras.emplace_back(prefix + "_c_eve", fmt_slope(d.c_eve.slope));
    extras.emplace_back(prefix + "_secrecy", fmt_slope(d.secrecy.slope));
  }
}

void print_dof(const std::vector<ojs::SchemeDof>& dof) {
  for (const auto& d : dof)
    std::cout << "  " << ojs::scheme_name(d.scheme)
              << ": r_bob slope " << fmt_slope(d.r_bob.slope)
              << ", secrecy slope " << fmt_slope(d.secrecy.slope) << "\n";
}

int run_sweep_command(const CliOverrides& cli, ojs::ExperimentMode mode) {
  const ojs::ExperimentSpec spec = resolve_spec(cli, mode);
  const ojs::SweepResult result = mode == ojs::ExperimentMode::FixedSweep
                                      ? ojs::run_fixed_sweep(spec)
                                      : ojs::run_scaling_sweep(spec);
  ojs::write_csv(result.records, spec.output_path);
  ojs::write_csv(result.summaries, summary_path(spec.output_path));
  std::vector<std::pair<std::string, std::string>> extras;
  append_dof_extras(result.dof, extras);
  ojs::write_metadata(spec, extras, spec.output_path + ".meta");
  std::cout << result.records.size() << " trial rows -> " << spec.output_path << "\n"
            << result.summaries.size() << " summary rows -> "
            << summary_path(spec.output_path) << "\n";
  print_dof(result.dof);
  return 0;
}

int run_outage_command(const CliOverrides& cli) {
  const ojs::ExperimentSpec spec = resolve_spec(cli, ojs::ExperimentMode::Outage);
  const ojs::OutageResult result = ojs::run_outage(spec);
  ojs::write_csv(result.curve, spec.output_path);
  ojs::write_csv(result.summaries, summary_path(spec.output_path));
  std::vector<std::pair<std::string, std::string>> extras;
  extras.emplace_back("r_for_epsilon", fmt_slope(result.r_for_epsilon));
  append_dof_extras(result.dof, extras);
  ojs::write_metadata(spec, extras, spec.output_path + ".meta");
  std::cout << result.curve.size() << " outage curve rows -> " << spec.output_path << "\n"
            << result.summaries.size() << " summary rows -> "
            << summary_path(spec.output_path) << "\n"
            << "eavesdropper rate bound at epsilon = " << spec.epsilon << ": "
            << fmt_slope(result.r_for_epsilon) << " bits\n";
  print_dof(result.dof);
  return 0;
}

int run_covering_command(const CliOverrides& cli) {
  const ojs::ExperimentSpec spec = resolve_spec(cli, ojs::ExperimentMode::Covering);
  const ojs::CoveringResult result = ojs::run_covering(spec);
  ojs::write_csv(result.points, spec.output_path);
  std::vector<std::pair<std::string, std::string>> extras;
  extras.emplace_back("loglog_slope", fmt_slope(result.loglog_slope));
  ojs::write_metadata(spec, extras, spec.output_path + ".meta");
  std::cout << result.points.size() << " covering rows -> " << spec.output_path << "\n"
            << "log-log decay slope: " << fmt_slope(result.loglog_slope) << "\n";
  return 0;
}

void add_common_options(CLI::App* cmd, CliOverrides& cli) {
  cmd->add_option("--config", cli.config_path, "Experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", cli.seed, "Master seed override")
      ->each([&cli](const std::string&) { cli.seed_set = true; });
  cmd->add_option("--trials", cli.trials, "Trial count override")
      ->each([&cli](const std::string&) { cli.trials_set = true; });
  cmd->add_option("--out", cli.out, "Primary output CSV path");
  cmd->add_flag("--greedy", cli.greedy,
                "Greedy selection instead of the exhaustive subset scan");
  cmd->add_option("--workers", cli.workers, "Worker threads (output is identical for any count)")
      ->each([&cli](const std::string&) { cli.workers_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opportunistic jammer selection experiments"};
  app.set_version_flag("--version", std::string(ojs::kVersion));
  app.require_subcommand(1);

  CliOverrides cli;
  auto* fixed = app.add_subcommand("fixed", "SNR sweep with a fixed jammer pool");
  auto* scaling = app.add_subcommand("scaling", "SNR sweep with a power-scaled jammer pool");
  auto* outage = app.add_subcommand("outage", "Eavesdropper-rate outage analysis");
  auto* covering = app.add_subcommand("covering", "Random-codebook covering radius decay");
  for (auto* cmd : {fixed, scaling, outage, covering}) add_common_options(cmd, cli);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixed->parsed()) return run_sweep_command(cli, ojs::ExperimentMode::FixedSweep);
    if (scaling->parsed()) return run_sweep_command(cli, ojs::ExperimentMode::ScalingSweep);
    if (outage->parsed()) return run_outage_command(cli);
    if (covering->parsed()) return run_covering_command(cli);
  } catch (const ojs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
