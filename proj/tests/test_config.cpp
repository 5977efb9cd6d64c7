#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "tsp/common.hpp"
#include "tsp/config.hpp"

namespace cfg = tsp::cfg;

TEST_CASE("empty text yields the default scenario") {
  auto c = cfg::parse_config_text("");
  cfg::ScenarioConfig d;
  CHECK(cfg::serialize_config(c) == cfg::serialize_config(d));
  CHECK(c.cells == 37);
  CHECK(c.group_number == 7);
  CHECK(c.users_per_cell == 20);
  CHECK(c.antennas == 128);
  CHECK(c.validate().empty());
}

TEST_CASE("round trip preserves every field bit for bit") {
  cfg::ScenarioConfig c;
  c.cells = 61;
  c.group_number = 3;
  c.cell_radius_m = 433.75;
  c.shadow_sigma_db = 4.0;
  c.antenna_corr = 0.1 + 0.2;  // deliberately non-representable sum
  c.ricean_k = 1e-7;
  c.bs_dbm = 43.01029995663981;
  c.antennas = 256;
  c.ms_estimator = "lmmse";
  c.bs_estimator = "cs";
  c.cs_sparsity = 58;
  c.ic_cluster = 18;
  c.power_policy = "pathloss";
  c.small_scale_reps = 12;
  auto text = cfg::serialize_config(c);
  auto back = cfg::parse_config_text(text);
  CHECK(cfg::serialize_config(back) == text);
  CHECK(back.antenna_corr == c.antenna_corr);
  CHECK(back.ricean_k == c.ricean_k);
  CHECK(back.bs_dbm == c.bs_dbm);
  CHECK(back.cell_radius_m == c.cell_radius_m);
  CHECK(back.ms_estimator == "lmmse");
  CHECK(back.ic_cluster == 18);
}

TEST_CASE("file round trip") {
  auto path = (std::filesystem::temp_directory_path() / "tsp_cfg_roundtrip.cfg").string();
  cfg::ScenarioConfig c;
  c.antennas = 64;
  c.noise_scaling = "full_band";
  cfg::save_config(c, path);
  auto back = cfg::load_config(path);
  CHECK(cfg::serialize_config(back) == cfg::serialize_config(c));
  std::remove(path.c_str());
  CHECK_THROWS_AS(cfg::load_config(path), tsp::SimError);
}

TEST_CASE("parser diagnostics carry the line number") {
  try {
    cfg::parse_config_text("layout.cells = 37\nbogus.key = 1\n");
    FAIL("expected a parse error");
  } catch (const tsp::SimError& e) {
    std::string msg = e.what();
    CHECK(msg.find("2") != std::string::npos);
    CHECK(msg.find("bogus.key") != std::string::npos);
  }
  CHECK_THROWS_AS(cfg::parse_config_text("layout.cells = seven\n"), tsp::SimError);
  CHECK_THROWS_AS(cfg::parse_config_text("layout.cells\n"), tsp::SimError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto c = cfg::parse_config_text("# a comment\n\n   \nantennas.count = 96\n");
  CHECK(c.antennas == 96);
}

TEST_CASE("validation lists violations instead of throwing") {
  cfg::ScenarioConfig c;
  c.antennas = -1;
  auto v = c.validate();
  REQUIRE_FALSE(v.empty());
  bool mentions = false;
  for (auto& s : v) mentions = mentions || s.find("antenna") != std::string::npos;
  CHECK(mentions);

  cfg::ScenarioConfig bad;
  bad.cells = 12;          // not a centered hexagonal count
  bad.group_number = 5;    // not of the rhombic form
  bad.antennas = -1;
  CHECK(bad.validate().size() >= 3);

  cfg::ScenarioConfig sec;
  sec.sectors = 3;
  sec.antennas = 128;  // not divisible by the sector count
  CHECK_FALSE(sec.validate().empty());
  sec.antennas = 129;
  CHECK(sec.validate().empty());
}

TEST_CASE("key catalog matches the serialized form") {
  auto keys = cfg::config_keys();
  auto text = cfg::serialize_config(cfg::ScenarioConfig{});
  std::size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(keys.size() == lines);
  for (auto& k : keys) CHECK(text.find(k + " = ") != std::string::npos);
}
