#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tsp/analytics.hpp"
#include "tsp/scenario.hpp"

namespace tsp::mc {

// One per-drop observation of a metric. Reports aggregate as the ratio of the
// summed numerators to the summed denominators (use den = 1 for plain means).
struct MetricSample {
  double num = 0.0;
  double den = 1.0;
};

struct Metric {
  std::string name;
  bool report_db = false;  // convert the aggregated ratio to decibels
};

// Evaluated once per (point, drop); returns one sample per declared metric,
// in order. param carries the point's sweep knob (an error ratio, an SINR
// target, ...) when the metrics use one.
using RowEvaluator = std::function<std::vector<MetricSample>(
    const scen::ScenarioContext&, const scen::DropState&, double)>;

struct ExperimentPoint {
  std::string label;
  double x = 0.0;      // sweep coordinate written to the CSV
  double param = 0.0;  // forwarded to the evaluator
  cfg::ScenarioConfig config;
};

struct ExperimentSpec {
  std::string name;
  std::vector<ExperimentPoint> points;
  std::vector<Metric> metrics;
  RowEvaluator eval;
  int drops = 1000;
  std::uint64_t seed = 1;
  bool dominance_cdf = false;  // runner also emits per-record dominance shares
};

struct ReportRow {
  std::string point;
  double x = 0.0;
  std::string metric;
  double mean = 0.0;
  double half_width = 0.0;  // 95% normal half-width, same units as mean
  long n = 0;
};

struct Report {
  std::string experiment;
  std::vector<ReportRow> rows;
};

// Runs every (point, drop) pair, parallel over a worker pool. Results are
// bit-identical for any worker count: samples land in drop-indexed slots and
// are reduced in document order with pairwise summation.
Report run_experiment(const ExperimentSpec& spec, int workers = 0);

// Numerically stable sum used by the reductions.
double pairwise_sum(const double* v, std::size_t n);

struct MetricStat {
  double mean = 0.0;
  double half_width = 0.0;
  long n = 0;
};
MetricStat reduce_ratio(const std::vector<MetricSample>& samples, bool report_db);

// Share of the channel-estimation error budget owned by the DL-data term,
// one record per (drop, target cell, user).
std::vector<double> dominance_records(const cfg::ScenarioConfig& config, int drops,
                                      std::uint64_t seed);
double fraction_at_least(const std::vector<double>& records, double threshold);

// Signal-level validation of the closed forms: per-user empirical MSCEE and
// UL/CL/PD SINR accumulators over `reps` fading realizations at one drop.
struct EmpiricalUser {
  double mscee = 0.0;  // mean squared estimation error per antenna
  double ul_num = 0.0, ul_den = 0.0;
  double cl_num = 0.0, cl_den = 0.0;
  double pd_num = 0.0, pd_den = 0.0;

  double ul() const { return ul_num / ul_den; }
  double cl() const { return cl_num / cl_den; }
  double pd() const { return pd_num / pd_den; }
};
std::vector<EmpiricalUser> empirical_link_metrics(const scen::ScenarioContext& ctx,
                                                  const scen::DropState& d, int l, int reps);

// Lighter chain for estimation error only (honors the configured estimators
// and cancellation): per-user mean over reps of ||est - truth||^2 / M.
std::vector<double> empirical_mscee(const scen::ScenarioContext& ctx, const scen::DropState& d,
                                    int l, int reps);

// Canned experiment definitions; preset_names lists them.
ExperimentSpec preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace tsp::mc
