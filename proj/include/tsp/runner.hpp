#pragma once

#include <string>
#include <vector>

#include "tsp/montecarlo.hpp"

namespace tsp::run {

struct RunOptions {
  std::string out_dir = "out";
  long long seed = -1;  // < 0 keeps the experiment's own seed
  int drops = -1;       // < 0 keeps the experiment's own drop count
  int workers = 0;      // 0 = one per hardware thread
  bool analytics_only = false;
};

struct RunResult {
  mc::Report report;
  std::vector<std::string> files;
  double wall_seconds = 0.0;
};

// Resolves a preset name or a config-file path into a runnable experiment,
// with the option overrides applied. A config file becomes a single-point
// experiment reporting the standard metric set.
mc::ExperimentSpec spec_for_target(const std::string& target, const RunOptions& opt);

// Runs the experiment and writes one CSV per metric, plot-ready columnar
// files per curve, optional dominance CDF files, and a JSON run manifest.
RunResult run_to_files(const std::string& target, const RunOptions& opt);

// CSV text for one metric of a report (header: sweep-value,metric,mean,
// half_width,n). Exposed so determinism can be checked without touching disk.
std::string csv_for_metric(const mc::Report& rep, const std::string& metric);

// Columnar plot text (x, mean, half_width) for one metric and curve. Curves
// group points whose label shares the prefix before the final '_' token.
std::string plot_for_curve(const mc::Report& rep, const std::string& metric,
                           const std::string& curve);
std::vector<std::string> curves_in(const mc::Report& rep);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace tsp::run
