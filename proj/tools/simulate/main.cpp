#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tsp/config.hpp"
#include "tsp/montecarlo.hpp"
#include "tsp/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Massive MIMO time-shifted-pilot channel estimation simulator"};
  app.require_subcommand(1);

  std::string target;
  tsp::run::RunOptions opt;
  auto* cmd_run = app.add_subcommand("run", "Run a preset experiment or a scenario config file");
  cmd_run->add_option("target", target, "Preset name or path to a config file")->required();
  cmd_run->add_option("--seed", opt.seed, "Base RNG seed");
  cmd_run->add_option("--drops", opt.drops, "User drops per sweep point");
  cmd_run->add_option("--workers", opt.workers, "Worker threads (0 = all hardware threads)");
  cmd_run->add_option("--out-dir", opt.out_dir, "Output directory (default: out)");
  cmd_run->add_flag("--analytics-only", opt.analytics_only,
                    "Drop signal-level sweep points, keep closed-form ones");

  std::string cfg_path;
  auto* cmd_validate = app.add_subcommand("validate", "Check a scenario config file");
  cmd_validate->add_option("config", cfg_path, "Path to a config file")->required();

  auto* cmd_presets = app.add_subcommand("presets", "List available preset experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      tsp::run::RunResult res = tsp::run::run_to_files(target, opt);
      std::cout << res.report.experiment << ": " << res.report.rows.size() << " result rows, "
                << res.files.size() << " files in " << opt.out_dir << " (" << res.wall_seconds
                << " s)\n";
    } else if (cmd_validate->parsed()) {
      tsp::cfg::ScenarioConfig c = tsp::cfg::load_config(cfg_path);
      const auto violations = c.validate();
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid: " << v << "\n";
        return 1;
      }
      std::cout << "OK\n";
    } else if (cmd_presets->parsed()) {
      for (const auto& n : tsp::mc::preset_names()) std::cout << n << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
