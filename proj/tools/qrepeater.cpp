// qrepeater: figure sweeps and the acceptance run.
//
//   qrepeater sweep --preset fig7a [--out fig7a.csv]
//   qrepeater sweep --config my.cfg [--set g_over_kappa=3]
//   qrepeater sweep --quantity gate_fidelities --axis delta_p --range -0.0566:0.0566:101
//   qrepeater accept [--json]
//
// Exit status: 0 success, 1 an acceptance check failed, 2 bad arguments or config.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrep/acceptance.hpp"
#include "qrep/sweep.hpp"

#ifndef QREP_PRESET_DIR
#define QREP_PRESET_DIR "presets"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;

struct SweepArgs {
  std::string preset;
  std::string preset_dir = QREP_PRESET_DIR;
  std::string config;
  std::string quantity;
  std::string axis;
  std::string range;
  std::string params;
  std::vector<std::string> overrides;
  std::string out;
};

int run_sweep_command(const SweepArgs& a) {
  qrep::ConfigMap config;
  if (!a.preset.empty()) {
    const auto path = std::filesystem::path(a.preset_dir) / (a.preset + ".cfg");
    if (!std::filesystem::exists(path)) throw qrep::ConfigError("unknown preset: " + a.preset);
    config = qrep::load_config_file(path.string());
  }
  if (!a.config.empty()) {
    for (const auto& [k, v] : qrep::load_config_file(a.config)) config[k] = v;
  }
  if (!a.quantity.empty()) config["quantity"] = a.quantity;
  if (!a.axis.empty()) config["axis"] = a.axis;
  if (!a.range.empty()) config["range"] = a.range;
  if (!a.params.empty()) config["params"] = a.params;
  for (const auto& o : a.overrides) qrep::apply_override(config, o);

  const qrep::SweepSpec spec = qrep::spec_from_config(config);
  const qrep::Table table = qrep::run_sweep(spec);

  if (a.out.empty()) {
    qrep::write_csv(std::cout, table);
  } else {
    std::ofstream os(a.out);
    if (!os) throw qrep::ConfigError("cannot write " + a.out);
    qrep::write_csv(os, table);
    std::fprintf(stderr, "wrote %zu rows to %s\n", table.rows.size(), a.out.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cavity-QED quantum repeater simulator"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "write a parameter sweep as CSV");
  sweep->add_option("--preset", sweep_args.preset, "named figure preset (fig2, fig3, fig7a, ...)");
  sweep->add_option("--preset-dir", sweep_args.preset_dir, "directory holding <preset>.cfg");
  sweep->add_option("--config", sweep_args.config, "key = value config file");
  sweep->add_option("--quantity", sweep_args.quantity, "quantity to tabulate");
  sweep->add_option("--axis", sweep_args.axis, "delta_p or g_over_kappa");
  sweep->add_option("--range", sweep_args.range, "start:stop:steps");
  sweep->add_option("--params", sweep_args.params, "experimental or fiber_cavity");
  sweep->add_option("--set", sweep_args.overrides, "key=value override (repeatable)");
  sweep->add_option("--out", sweep_args.out, "CSV output path (default stdout)");

  bool json = false;
  auto* accept = app.add_subcommand("accept", "run the acceptance checks");
  accept->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_args);
    const auto report = qrep::run_acceptance();
    std::cout << (json ? qrep::format_json(report) + "\n" : qrep::format_text(report));
    return report.all_passed() ? kExitOk : kExitCheckFailed;
  } catch (const qrep::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
}
