#include "tsp/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>

#include "tsp/common.hpp"
#include "tsp/topology.hpp"

namespace tsp::cfg {

namespace {

using Field = std::variant<int ScenarioConfig::*, double ScenarioConfig::*,
                           std::string ScenarioConfig::*, int frame::FrameConfig::*>;

struct KeyDef {
  const char* key;
  Field field;
};

const std::vector<KeyDef>& key_table() {
  static const std::vector<KeyDef> table = {
      {"layout.cells", &ScenarioConfig::cells},
      {"layout.group_number", &ScenarioConfig::group_number},
      {"layout.cell_radius_m", &ScenarioConfig::cell_radius_m},
      {"layout.ms_exclusion_m", &ScenarioConfig::ms_exclusion_m},
      {"layout.users_per_cell", &ScenarioConfig::users_per_cell},
      {"channel.carrier_ghz", &ScenarioConfig::carrier_ghz},
      {"channel.bandwidth_mhz", &ScenarioConfig::bandwidth_mhz},
      {"channel.pathloss_exponent", &ScenarioConfig::pathloss_exponent},
      {"channel.shadow_sigma_db", &ScenarioConfig::shadow_sigma_db},
      {"channel.ricean_k", &ScenarioConfig::ricean_k},
      {"channel.antenna_corr", &ScenarioConfig::antenna_corr},
      {"power.bs_dbm", &ScenarioConfig::bs_dbm},
      {"power.ms_dbm", &ScenarioConfig::ms_dbm},
      {"power.bs_pilot_dbm", &ScenarioConfig::bs_pilot_dbm},
      {"power.policy", &ScenarioConfig::power_policy},
      {"noise.psd_dbm_hz", &ScenarioConfig::noise_psd_dbm_hz},
      {"noise.scaling", &ScenarioConfig::noise_scaling},
      {"frame.coherence_symbols", &frame::FrameConfig::coherence_symbols},
      {"frame.pilot_symbols", &frame::FrameConfig::pilot_symbols},
      {"frame.dl_symbols", &frame::FrameConfig::dl_symbols},
      {"frame.ul_symbols", &frame::FrameConfig::ul_symbols},
      {"frame.subcarriers", &frame::FrameConfig::subcarriers},
      {"frame.bs_coherence_frames", &frame::FrameConfig::bs_coherence_frames},
      {"antennas.count", &ScenarioConfig::antennas},
      {"antennas.sectors", &ScenarioConfig::sectors},
      {"estimator.ms", &ScenarioConfig::ms_estimator},
      {"estimator.bs", &ScenarioConfig::bs_estimator},
      {"estimator.cs_accuracy", &ScenarioConfig::cs_accuracy},
      {"estimator.cs_sparsity", &ScenarioConfig::cs_sparsity},
      {"precoder.type", &ScenarioConfig::precoder},
      {"ic.cluster_size", &ScenarioConfig::ic_cluster},
      {"averaging.scope", &ScenarioConfig::averaging_scope},
      {"averaging.sinr_domain", &ScenarioConfig::sinr_domain},
      {"sim.small_scale_reps", &ScenarioConfig::small_scale_reps},
      {"sim.data_symbols", &ScenarioConfig::data_symbols},
  };
  return table;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Trim to the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw SimError("config line " + std::to_string(line) + ": " + msg);
}

bool one_of(const std::string& v, std::initializer_list<const char*> opts) {
  return std::any_of(opts.begin(), opts.end(), [&](const char* o) { return v == o; });
}

}  // namespace

std::vector<std::string> ScenarioConfig::validate() const {
  std::vector<std::string> bad;
  if (!topo::rings_for_cells(cells)) {
    bad.push_back("layout.cells must be a centered hexagonal count (1, 7, 19, 37, 61, ...)");
  }
  if (!topo::rhombic_decomposition(group_number)) {
    bad.push_back("layout.group_number must admit a hexagonal reuse pattern (1, 3, 4, 7, 9, 12, ...)");
  }
  if (group_number > cells) bad.push_back("layout.group_number cannot exceed layout.cells");
  if (cell_radius_m <= 0.0) bad.push_back("layout.cell_radius_m must be > 0");
  if (ms_exclusion_m < 0.0) bad.push_back("layout.ms_exclusion_m must be >= 0");
  if (ms_exclusion_m >= 0.5 * std::sqrt(3.0) * cell_radius_m) {
    bad.push_back("layout.ms_exclusion_m must be smaller than the cell apothem");
  }
  if (users_per_cell < 1) bad.push_back("layout.users_per_cell must be >= 1");
  if (carrier_ghz <= 0.0) bad.push_back("channel.carrier_ghz must be > 0");
  if (bandwidth_mhz <= 0.0) bad.push_back("channel.bandwidth_mhz must be > 0");
  if (pathloss_exponent <= 0.0) bad.push_back("channel.pathloss_exponent must be > 0");
  if (shadow_sigma_db < 0.0) bad.push_back("channel.shadow_sigma_db must be >= 0");
  if (ricean_k < 0.0) bad.push_back("channel.ricean_k must be >= 0");
  if (antenna_corr < 0.0 || antenna_corr >= 1.0) {
    bad.push_back("channel.antenna_corr must lie in [0, 1)");
  }
  if (!one_of(power_policy, {"uniform", "pathloss"})) {
    bad.push_back("power.policy must be uniform or pathloss");
  }
  if (!one_of(noise_scaling, {"per_subcarrier", "full_band"})) {
    bad.push_back("noise.scaling must be per_subcarrier or full_band");
  }
  for (const std::string& v : frame.validate(group_number)) bad.push_back(v);
  if (antennas < 1) bad.push_back("antennas.count must be >= 1");
  if (sectors != 1 && sectors != 3 && sectors != 6) {
    bad.push_back("antennas.sectors must be 1, 3, or 6");
  } else if (antennas % sectors != 0) {
    bad.push_back("antennas.sectors must divide antennas.count");
  }
  if (!one_of(ms_estimator, {"ls", "lmmse"})) bad.push_back("estimator.ms must be ls or lmmse");
  if (!one_of(bs_estimator, {"ls", "cs", "cs-data"})) {
    bad.push_back("estimator.bs must be ls, cs, or cs-data");
  }
  if (!(cs_accuracy > 0.0 && cs_accuracy <= 1.0)) {
    bad.push_back("estimator.cs_accuracy must lie in (0, 1]");
  }
  if (cs_sparsity < 0) bad.push_back("estimator.cs_sparsity must be >= 0");
  if (!one_of(precoder, {"mf", "zf"})) bad.push_back("precoder.type must be mf or zf");
  if (ic_cluster < 0) bad.push_back("ic.cluster_size must be >= 0");
  if (ic_cluster >= cells) bad.push_back("ic.cluster_size must be smaller than layout.cells");
  if (!one_of(averaging_scope, {"center", "all"})) {
    bad.push_back("averaging.scope must be center or all");
  }
  if (!one_of(sinr_domain, {"linear", "db"})) bad.push_back("averaging.sinr_domain must be linear or db");
  if (small_scale_reps < 0) bad.push_back("sim.small_scale_reps must be >= 0");
  if (data_symbols < 1) bad.push_back("sim.data_symbols must be >= 1");
  return bad;
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream out;
  for (const KeyDef& def : key_table()) {
    out << def.key << " = ";
    std::visit(
        [&](auto member) {
          using M = std::decay_t<decltype(member)>;
          if constexpr (std::is_same_v<M, int frame::FrameConfig::*>) {
            out << c.frame.*member;
          } else if constexpr (std::is_same_v<M, double ScenarioConfig::*>) {
            out << format_double(c.*member);
          } else {
            out << c.*member;
          }
        },
        def.field);
    out << "\n";
  }
  return out.str();
}

ScenarioConfig parse_config_text(const std::string& text) {
  ScenarioConfig c;
  std::istringstream in(text);
  std::string raw;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(lineno, "missing key before '='");
    if (value.empty()) fail(lineno, "missing value for key '" + key + "'");

    const auto& table = key_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const KeyDef& d) { return key == d.key; });
    if (it == table.end()) fail(lineno, "unknown key '" + key + "'");
    if (!seen.insert(key).second) fail(lineno, "duplicate key '" + key + "'");

    std::visit(
        [&](auto member) {
          using M = std::decay_t<decltype(member)>;
          if constexpr (std::is_same_v<M, std::string ScenarioConfig::*>) {
            c.*member = value;
          } else {
            char* end = nullptr;
            if constexpr (std::is_same_v<M, double ScenarioConfig::*>) {
              const double v = std::strtod(value.c_str(), &end);
              if (end != value.c_str() + value.size()) {
                fail(lineno, "key '" + key + "' needs a number, got '" + value + "'");
              }
              c.*member = v;
            } else {
              const long v = std::strtol(value.c_str(), &end, 10);
              if (end != value.c_str() + value.size()) {
                fail(lineno, "key '" + key + "' needs an integer, got '" + value + "'");
              }
              if constexpr (std::is_same_v<M, int frame::FrameConfig::*>) {
                c.frame.*member = static_cast<int>(v);
              } else {
                c.*member = static_cast<int>(v);
              }
            }
          }
        },
        it->field);
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SimError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void save_config(const ScenarioConfig& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SimError("cannot write config file: " + path);
  out << serialize_config(c);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const KeyDef& d : key_table()) keys.push_back(d.key);
  return keys;
}

}  // namespace tsp::cfg
