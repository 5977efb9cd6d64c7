#pragma once

#include <cstdint>
#include <vector>

#include "tsp/config.hpp"
#include "tsp/topology.hpp"

namespace tsp::scen {

// Immutable per-scenario state derived from a validated config: the grid,
// the pilot-group coloring, interference-cancellation clusters with their
// BS-BS pilot schedule, and powers converted to watts. Fields are public so
// tests can assemble small synthetic scenarios directly.
struct ScenarioContext {
  cfg::ScenarioConfig config;
  topo::HexLayout layout;

  int groups = 1;
  std::vector<int> group_of_cell;
  std::vector<std::vector<int>> group_cells;

  // Per cell: the cancellation cluster (ascending indices); all empty when
  // cancellation is off. bs_schedule is meaningful only alongside clusters.
  std::vector<std::vector<int>> cluster;
  topo::BsPilotSchedule bs_schedule;

  std::vector<int> target_cells;

  double bs_power_w = 0.0;
  double ms_power_w = 0.0;
  double bs_pilot_power_w = 0.0;
  double noise_w = 0.0;  // per estimation/detection resource

  int cells() const { return static_cast<int>(layout.center.size()); }
  int users() const { return config.users_per_cell; }
  int antennas() const { return config.antennas; }

  // Throws SimError listing every config violation.
  static ScenarioContext build(const cfg::ScenarioConfig& c);
};

// Large-scale fading state of one user drop: positions, MS-to-BS gains,
// BS-to-BS gains, and the per-user power allocation under the configured
// policy. Fully determined by (seed, drop).
struct DropState {
  int cells = 0;
  int users = 0;
  std::uint64_t seed = 0;
  std::uint32_t drop = 0;

  std::vector<std::vector<topo::Vec2>> ms_pos;
  std::vector<double> beta_;   // [l][j][k]: BS l <- MS (j, k)
  std::vector<double> alpha_;  // [l][d]: BS l <- BS d, diagonal zero
  std::vector<double> pilot_power_;  // [j][k], watts
  std::vector<double> ul_power_;     // [j][k], watts
  std::vector<double> dl_power_;     // [j][k], watts (per-user DL share)

  double beta(int l, int j, int k) const { return beta_[(l * cells + j) * users + k]; }
  double alpha(int l, int d) const { return alpha_[l * cells + d]; }
  double pilot_power(int j, int k) const { return pilot_power_[j * users + k]; }
  double ul_power(int j, int k) const { return ul_power_[j * users + k]; }
  double dl_power(int j, int k) const { return dl_power_[j * users + k]; }
  double dl_total(int j) const;
};

DropState make_drop(const ScenarioContext& ctx, std::uint64_t seed, std::uint32_t drop);

// Large-scale gain between MS (l, kp) and MS (j, k): distance pathloss times
// shadow fading, symmetric in the endpoints, zero for a user and itself.
double ms_ms_gain(const ScenarioContext& ctx, const DropState& d, int l, int kp, int j, int k);

}  // namespace tsp::scen
