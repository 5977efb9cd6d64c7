#include "tsp/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsp/common.hpp"
#include "tsp/kernels.hpp"
#include "tsp/signals.hpp"

namespace tsp::run {
namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Curve id: the label with its final '_' token (the sweep coordinate)
// stripped; single-token labels form one shared curve.
std::string curve_of(const std::string& label) {
  const std::size_t pos = label.rfind('_');
  if (pos == std::string::npos) return "all";
  return label.substr(0, pos);
}

bool is_preset(const std::string& name) {
  const auto names = mc::preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// Standard metric set for a user-supplied scenario: normalized estimation
// error, the three closed-form SINRs, and net spectral efficiency; plus the
// signal-level counterparts when realizations are requested.
mc::ExperimentSpec custom_spec(const cfg::ScenarioConfig& config, const std::string& label) {
  const bool with_signal = config.small_scale_reps > 0;

  mc::ExperimentSpec s;
  s.name = label;
  s.metrics = {{"mscee_db", true},
               {"sinr_ul_db", true},
               {"sinr_cl_db", true},
               {"sinr_pd_db", true},
               {"se", false}};
  if (with_signal)
    for (const char* n : {"mscee_emp_db", "ul_emp_db", "cl_emp_db", "pd_emp_db"})
      s.metrics.push_back({n, true});

  s.eval = [with_signal](const scen::ScenarioContext& ctx, const scen::DropState& ds,
                         double) -> std::vector<mc::MetricSample> {
    const auto& c = ctx.config;
    const int m = ctx.antennas();
    std::vector<mc::MetricSample> out(with_signal ? 9 : 5, mc::MetricSample{0, 0});

    int tau = 0;
    if (c.ic_cluster > 0) {
      if (c.bs_estimator == "ls") {
        tau = analytics::ls_bs_pilot_length(m);
      } else {
        const int sp = c.cs_sparsity > 0 ? c.cs_sparsity : sig::cs_support_size(ctx, ds, 0);
        tau = analytics::cs_pilot_length(sp, m);
      }
    }

    for (int l : ctx.target_cells) {
      std::vector<mc::EmpiricalUser> emp;
      if (with_signal) emp = mc::empirical_link_metrics(ctx, ds, l, c.small_scale_reps);
      for (int k = 0; k < ctx.users(); ++k) {
        const double beta = ds.beta(l, l, k);
        out[0].num += analytics::user_mscee(ctx, ds, l, k);
        out[0].den += beta;
        const double s_ul = analytics::sinr_ul(ctx, ds, l, k);
        out[1].num += s_ul;
        out[1].den += 1.0;
        out[2].num += analytics::sinr_cl(ctx, ds, l, k);
        out[2].den += 1.0;
        out[3].num += analytics::sinr_pd(ctx, ds, l, k);
        out[3].den += 1.0;
        out[4].num += c.ic_cluster > 0
                          ? analytics::spectral_efficiency_ic(c.frame, s_ul, tau, c.ic_cluster,
                                                              c.bs_estimator == "cs-data")
                          : analytics::spectral_efficiency(c.frame, s_ul);
        out[4].den += 1.0;
        if (with_signal) {
          const auto& e = emp[static_cast<std::size_t>(k)];
          out[5].num += e.mscee;
          out[5].den += beta;
          out[6].num += e.ul();
          out[6].den += 1.0;
          out[7].num += e.cl();
          out[7].den += 1.0;
          out[8].num += e.pd();
          out[8].den += 1.0;
        }
      }
    }
    return out;
  };

  mc::ExperimentPoint p;
  p.label = "custom";
  p.x = 0.0;
  p.config = config;
  s.points.push_back(std::move(p));
  s.drops = 100;
  return s;
}

}  // namespace

mc::ExperimentSpec spec_for_target(const std::string& target, const RunOptions& opt) {
  mc::ExperimentSpec spec;
  if (is_preset(target)) {
    spec = mc::preset(target);
  } else if (std::filesystem::exists(target)) {
    cfg::ScenarioConfig config = cfg::load_config(target);
    if (opt.analytics_only) config.small_scale_reps = 0;
    spec = custom_spec(config, std::filesystem::path(target).stem().string());
  } else {
    std::string msg = "'" + target + "' is neither a preset nor a config file; presets:";
    for (const auto& n : mc::preset_names()) msg += " " + n;
    throw SimError(msg);
  }

  if (opt.analytics_only) {
    std::vector<mc::ExperimentPoint> kept;
    for (auto& p : spec.points)
      if (p.config.small_scale_reps == 0) kept.push_back(std::move(p));
    if (kept.empty())
      throw SimError("experiment '" + spec.name + "' has only signal-level points; " +
                     "rerun without --analytics-only");
    spec.points = std::move(kept);
  }
  if (opt.seed >= 0) spec.seed = static_cast<std::uint64_t>(opt.seed);
  if (opt.drops > 0) spec.drops = opt.drops;
  return spec;
}

std::string csv_for_metric(const mc::Report& rep, const std::string& metric) {
  std::string out = "sweep-value,metric,mean,half_width,n\n";
  for (const auto& row : rep.rows) {
    if (row.metric != metric) continue;
    out += fmt(row.x);
    out += ',';
    out += row.metric;
    out += ',';
    out += fmt(row.mean);
    out += ',';
    out += fmt(row.half_width);
    out += ',';
    out += std::to_string(row.n);
    out += '\n';
  }
  return out;
}

std::vector<std::string> curves_in(const mc::Report& rep) {
  std::vector<std::string> curves;
  for (const auto& row : rep.rows) {
    const std::string c = curve_of(row.point);
    if (std::find(curves.begin(), curves.end(), c) == curves.end()) curves.push_back(c);
  }
  return curves;
}

std::string plot_for_curve(const mc::Report& rep, const std::string& metric,
                           const std::string& curve) {
  std::string out = "# " + rep.experiment + " " + metric + " " + curve + "\n";
  out += "# x mean half_width\n";
  std::size_t rows = 0;
  for (const auto& row : rep.rows) {
    if (row.metric != metric || curve_of(row.point) != curve) continue;
    out += fmt(row.x) + " " + fmt(row.mean) + " " + fmt(row.half_width) + "\n";
    ++rows;
  }
  return rows == 0 ? std::string() : out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SimError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw SimError("failed writing '" + path + "'");
}

RunResult run_to_files(const std::string& target, const RunOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  mc::ExperimentSpec spec = spec_for_target(target, opt);

  std::filesystem::create_directories(opt.out_dir);
  const std::filesystem::path dir(opt.out_dir);

  RunResult res;
  res.report = mc::run_experiment(spec, opt.workers);

  for (const auto& metric : spec.metrics) {
    const std::string path = (dir / (metric.name + ".csv")).string();
    write_text_file(path, csv_for_metric(res.report, metric.name));
    res.files.push_back(path);
  }

  for (const auto& metric : spec.metrics) {
    for (const auto& curve : curves_in(res.report)) {
      const std::string text = plot_for_curve(res.report, metric.name, curve);
      if (text.empty()) continue;
      const std::string path = (dir / ("plot_" + metric.name + "_" + curve + ".dat")).string();
      write_text_file(path, text);
      res.files.push_back(path);
    }
  }

  if (spec.dominance_cdf) {
    for (const auto& p : spec.points) {
      std::vector<double> rec = mc::dominance_records(p.config, spec.drops, spec.seed);
      if (rec.size() < 100) {
        std::cerr << "warning: " << p.label << " has only " << rec.size()
                  << " dominance records; skipping its CDF file\n";
        continue;
      }
      std::sort(rec.begin(), rec.end());
      std::string text = "# " + spec.name + " dominance CDF " + p.label + "\n# share cdf\n";
      for (std::size_t i = 0; i < rec.size(); ++i)
        text += fmt(rec[i]) + " " +
                fmt(static_cast<double>(i + 1) / static_cast<double>(rec.size())) + "\n";
      const std::string path = (dir / ("cdf_" + p.label + ".dat")).string();
      write_text_file(path, text);
      res.files.push_back(path);
    }
  }

  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  nlohmann::ordered_json man;
  man["experiment"] = spec.name;
  man["seed"] = spec.seed;
  man["drops"] = spec.drops;
  man["workers"] = opt.workers;
  man["analytics_only"] = opt.analytics_only;
  man["metrics"] = nlohmann::ordered_json::array();
  for (const auto& m : spec.metrics) man["metrics"].push_back(m.name);
  man["points"] = nlohmann::ordered_json::array();
  for (const auto& p : spec.points) {
    nlohmann::ordered_json jp;
    jp["label"] = p.label;
    jp["x"] = p.x;
    nlohmann::ordered_json jc;
    const std::string text = cfg::serialize_config(p.config);
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      const std::string line = text.substr(start, end - start);
      const std::size_t sep = line.find(" = ");
      if (sep != std::string::npos) jc[line.substr(0, sep)] = line.substr(sep + 3);
      start = end + 1;
    }
    jp["config"] = std::move(jc);
    man["points"].push_back(std::move(jp));
  }
  man["noise_scaling"] = spec.points.front().config.noise_scaling;
  man["kernels"] = kern::active_isa();
  nlohmann::ordered_json ver;
  ver["simulate"] = kVersion;
#if defined(__VERSION__)
  ver["compiler"] = __VERSION__;
#endif
  man["versions"] = std::move(ver);
  man["wall_seconds"] = res.wall_seconds;
  man["files"] = res.files;

  const std::string man_path = (dir / "manifest.json").string();
  write_text_file(man_path, man.dump(2) + "\n");
  res.files.push_back(man_path);

  return res;
}

}  // namespace tsp::run
