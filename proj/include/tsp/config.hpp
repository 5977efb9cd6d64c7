#pragma once

#include <string>
#include <vector>

#include "tsp/frame.hpp"

namespace tsp::cfg {

// Flat scenario description. Defaults reproduce the reference macro-cell
// setup: 37-cell hexagonal grid, 7 pilot groups, 20 users per 500 m cell,
// 2 GHz carrier over 10 MHz, pathloss exponent 3.8 with 8 dB shadowing,
// 46 dBm BS / 23 dBm MS transmit power.
struct ScenarioConfig {
  // layout.*
  int cells = 37;
  int group_number = 7;
  double cell_radius_m = 500.0;
  double ms_exclusion_m = 20.0;
  int users_per_cell = 20;

  // channel.*
  double carrier_ghz = 2.0;
  double bandwidth_mhz = 10.0;
  double pathloss_exponent = 3.8;
  double shadow_sigma_db = 8.0;
  double ricean_k = 10.0;
  double antenna_corr = 0.8;

  // power.*
  double bs_dbm = 46.0;
  double ms_dbm = 23.0;
  double bs_pilot_dbm = 46.0;
  std::string power_policy = "uniform";  // uniform | pathloss

  // noise.*
  double noise_psd_dbm_hz = -174.0;
  std::string noise_scaling = "per_subcarrier";  // per_subcarrier | full_band

  // frame.*
  frame::FrameConfig frame;

  // antennas.*
  int antennas = 128;
  int sectors = 1;

  // estimator.*
  std::string ms_estimator = "ls";   // ls | lmmse
  std::string bs_estimator = "ls";   // ls | cs | cs-data
  double cs_accuracy = 0.99;
  int cs_sparsity = 0;  // 0 = measure per drop

  // precoder.*
  std::string precoder = "mf";  // mf | zf

  // ic.*
  int ic_cluster = 0;  // 0 = plain time-shifted pilots, no cancellation

  // averaging.*
  std::string averaging_scope = "center";   // center | all
  std::string sinr_domain = "linear";       // linear | db

  // sim.*
  int small_scale_reps = 0;  // 0 = closed-form analytics only
  int data_symbols = 16;

  // Every violated constraint, empty when usable.
  std::vector<std::string> validate() const;
};

// Textual form: one "key = value" per line, keys sorted, doubles printed so
// that parsing returns the exact same bits.
std::string serialize_config(const ScenarioConfig& c);

// Parses the serialize_config format. '#' starts a comment; blank lines are
// skipped; unknown or duplicate keys and malformed values throw SimError with
// the offending line number. Absent keys keep their defaults, so empty text
// yields the default scenario.
ScenarioConfig parse_config_text(const std::string& text);

ScenarioConfig load_config(const std::string& path);
void save_config(const ScenarioConfig& c, const std::string& path);

// Keys understood by the parser, in serialization order.
std::vector<std::string> config_keys();

}  // namespace tsp::cfg
