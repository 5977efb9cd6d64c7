#include "tsp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "tsp/channel.hpp"

namespace tsp::scen {

namespace {

double hypot2(const topo::Vec2& a, const topo::Vec2& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

ScenarioContext ScenarioContext::build(const cfg::ScenarioConfig& c) {
  const std::vector<std::string> bad = c.validate();
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "invalid scenario config:";
    for (const std::string& b : bad) msg << "\n  - " << b;
    throw SimError(msg.str());
  }

  ScenarioContext ctx;
  ctx.config = c;
  ctx.layout = topo::build_hex_layout(*topo::rings_for_cells(c.cells), c.cell_radius_m);
  ctx.group_of_cell = topo::assign_groups(ctx.layout, c.group_number);
  ctx.groups = *std::max_element(ctx.group_of_cell.begin(), ctx.group_of_cell.end()) + 1;
  ctx.group_cells.assign(ctx.groups, {});
  for (int l = 0; l < ctx.cells(); ++l) ctx.group_cells[ctx.group_of_cell[l]].push_back(l);

  if (c.ic_cluster > 0) {
    ctx.cluster.resize(ctx.cells());
    for (int l = 0; l < ctx.cells(); ++l) ctx.cluster[l] = topo::ic_cluster(ctx.layout, l, c.ic_cluster);
    ctx.bs_schedule = topo::bs_reuse_schedule(ctx.layout, c.ic_cluster);
  }

  if (c.averaging_scope == "center") {
    ctx.target_cells = {0};
  } else {
    ctx.target_cells.resize(ctx.cells());
    std::iota(ctx.target_cells.begin(), ctx.target_cells.end(), 0);
  }

  ctx.bs_power_w = dbm_to_watt(c.bs_dbm);
  ctx.ms_power_w = dbm_to_watt(c.ms_dbm);
  ctx.bs_pilot_power_w = dbm_to_watt(c.bs_pilot_dbm);
  const double full_band = dbm_to_watt(c.noise_psd_dbm_hz) * c.bandwidth_mhz * 1e6;
  ctx.noise_w = c.noise_scaling == "full_band" ? full_band : full_band / c.frame.subcarriers;
  return ctx;
}

double DropState::dl_total(int j) const {
  double s = 0.0;
  for (int k = 0; k < users; ++k) s += dl_power(j, k);
  return s;
}

DropState make_drop(const ScenarioContext& ctx, std::uint64_t seed, std::uint32_t drop) {
  const int L = ctx.cells();
  const int K = ctx.users();
  const double eta = ctx.config.pathloss_exponent;
  const double sigma = ctx.config.shadow_sigma_db;

  DropState d;
  d.cells = L;
  d.users = K;
  d.seed = seed;
  d.drop = drop;
  d.ms_pos = topo::drop_users(ctx.layout, K, ctx.config.ms_exclusion_m, seed, drop);

  d.beta_.resize(static_cast<size_t>(L) * L * K);
  for (int l = 0; l < L; ++l) {
    for (int j = 0; j < L; ++j) {
      for (int k = 0; k < K; ++k) {
        const double dist = hypot2(ctx.layout.center[l], d.ms_pos[j][k]);
        rng::Stream s(seed, drop, rng::LinkClass::shadow_ms_bs,
                      (static_cast<std::uint64_t>(l) << 32) |
                          static_cast<std::uint64_t>(j * K + k));
        d.beta_[(static_cast<size_t>(l) * L + j) * K + k] =
            chan::pathloss_gain(dist, eta) * chan::lognormal_shadow(s, sigma);
      }
    }
  }

  d.alpha_.assign(static_cast<size_t>(L) * L, 0.0);
  for (int l = 0; l < L; ++l) {
    for (int dd = 0; dd < L; ++dd) {
      if (dd == l) continue;
      rng::Stream s(seed, drop, rng::LinkClass::shadow_bs_bs,
                    (static_cast<std::uint64_t>(l) << 32) | static_cast<std::uint64_t>(dd));
      d.alpha_[static_cast<size_t>(l) * L + dd] =
          chan::pathloss_gain(ctx.layout.distance(l, dd), eta) * chan::lognormal_shadow(s, sigma);
    }
  }

  d.pilot_power_.resize(static_cast<size_t>(L) * K);
  d.ul_power_.resize(static_cast<size_t>(L) * K);
  d.dl_power_.resize(static_cast<size_t>(L) * K);
  const bool pathloss_policy = ctx.config.power_policy == "pathloss";
  for (int j = 0; j < L; ++j) {
    if (!pathloss_policy) {
      for (int k = 0; k < K; ++k) {
        d.pilot_power_[static_cast<size_t>(j) * K + k] = ctx.ms_power_w;
        d.ul_power_[static_cast<size_t>(j) * K + k] = ctx.ms_power_w;
        d.dl_power_[static_cast<size_t>(j) * K + k] = ctx.bs_power_w / K;
      }
      continue;
    }
    // Statistical inversion: MS power scaled by the serving-link gain so the
    // weakest user transmits at full power; DL shares split the BS budget in
    // proportion to inverse gain.
    double min_beta = std::numeric_limits<double>::infinity();
    double inv_sum = 0.0;
    for (int k = 0; k < K; ++k) {
      const double b = d.beta(j, j, k);
      min_beta = std::min(min_beta, b);
      inv_sum += 1.0 / b;
    }
    for (int k = 0; k < K; ++k) {
      const double b = d.beta(j, j, k);
      d.pilot_power_[static_cast<size_t>(j) * K + k] = ctx.ms_power_w * min_beta / b;
      d.ul_power_[static_cast<size_t>(j) * K + k] = ctx.ms_power_w * min_beta / b;
      d.dl_power_[static_cast<size_t>(j) * K + k] = ctx.bs_power_w * (1.0 / b) / inv_sum;
    }
  }
  return d;
}

double ms_ms_gain(const ScenarioContext& ctx, const DropState& d, int l, int kp, int j, int k) {
  const int K = ctx.users();
  const std::uint64_t a = static_cast<std::uint64_t>(l) * K + kp;
  const std::uint64_t b = static_cast<std::uint64_t>(j) * K + k;
  if (a == b) return 0.0;
  const double dist = std::hypot(d.ms_pos[l][kp].x - d.ms_pos[j][k].x,
                                 d.ms_pos[l][kp].y - d.ms_pos[j][k].y);
  rng::Stream s(d.seed, d.drop, rng::LinkClass::shadow_ms_ms,
                (std::max(a, b) << 20) | std::min(a, b));
  return chan::pathloss_gain(dist, ctx.config.pathloss_exponent) *
         chan::lognormal_shadow(s, ctx.config.shadow_sigma_db);
}

}  // namespace tsp::scen
