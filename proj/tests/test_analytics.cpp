#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "tsp/analytics.hpp"
#include "tsp/common.hpp"
#include "tsp/scenario.hpp"

namespace an = tsp::analytics;
namespace scen = tsp::scen;
namespace topo = tsp::topo;

namespace {

// Three cells, one user each, every large-scale quantity set by hand so each
// closed-form output can be checked against plain scalar arithmetic. Cells 0
// and 1 share a pilot group; cell 2 is alone in the second group.
scen::ScenarioContext toy_context() {
  scen::ScenarioContext ctx;
  ctx.config.users_per_cell = 1;
  ctx.config.antennas = 64;
  ctx.config.sectors = 1;
  ctx.config.shadow_sigma_db = 0.0;  // makes ms_ms_gain pure pathloss
  ctx.layout.rings = 0;
  ctx.layout.cell_radius = 500.0;
  ctx.layout.spacing = 500.0 * std::sqrt(3.0);
  ctx.layout.center = {{0.0, 0.0}, {1000.0, 0.0}, {0.0, 2000.0}};
  ctx.layout.axial = {{0, 0}, {1, 0}, {0, 1}};
  ctx.groups = 2;
  ctx.group_of_cell = {0, 0, 1};
  ctx.group_cells = {{0, 1}, {2}};
  ctx.target_cells = {0, 1, 2};
  ctx.bs_power_w = 39.8;
  ctx.ms_power_w = 0.2;
  ctx.bs_pilot_power_w = 2.5;
  ctx.noise_w = 8e-15;
  return ctx;
}

scen::DropState toy_drop() {
  scen::DropState d;
  d.cells = 3;
  d.users = 1;
  d.seed = 12;
  d.drop = 0;
  d.ms_pos = {{{0.0, 40.0}}, {{1030.0, 0.0}}, {{0.0, 2040.0}}};
  // beta(l, j, k): BS l <- MS (j, k); row-major in (l, j).
  d.beta_ = {1e-7, 3e-9,  6e-10,   // BS 0
             2e-9, 9e-8,  5e-10,   // BS 1
             4e-10, 7e-10, 8e-8};  // BS 2
  d.alpha_ = {0.0,   2e-11,  3e-11,
              2e-11, 0.0,    1.5e-11,
              3e-11, 1.5e-11, 0.0};
  d.pilot_power_ = {0.2, 0.15, 0.1};
  d.ul_power_ = {0.2, 0.12, 0.18};
  d.dl_power_ = {39.8, 30.0, 25.0};
  return d;
}

}  // namespace

TEST_CASE("estimation error splits into hand-computed pilot, data, and noise parts") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  // Pooled pilot energy: subcarriers * pilot_symbols * own pilot power.
  const double pooled = 5.0 * 4.0 * 0.2;

  const an::MsceeBreakdown m = an::mscee_tsp(ctx, d, 0, 0);
  CHECK(m.pilot == doctest::Approx(0.15 / 0.2 * 3e-9).epsilon(1e-12));
  CHECK(m.data == doctest::Approx(25.0 * 3e-11 / pooled).epsilon(1e-12));
  CHECK(m.noise == doctest::Approx(8e-15 / pooled).epsilon(1e-12));
  CHECK(m.total() == doctest::Approx(m.pilot + m.data + m.noise).epsilon(1e-15));

  // Everyone in one group: the data term vanishes, the pilot term gains
  // cell 2 weighted by its pilot power ratio.
  auto ctx1 = ctx;
  ctx1.groups = 1;
  ctx1.group_of_cell = {0, 0, 0};
  ctx1.group_cells = {{0, 1, 2}};
  const an::MsceeBreakdown m1 = an::mscee_tsp(ctx1, d, 0, 0);
  CHECK(m1.pilot ==
        doctest::Approx(0.15 / 0.2 * 3e-9 + 0.1 / 0.2 * 6e-10).epsilon(1e-12));
  CHECK(m1.data == 0.0);
  CHECK(m1.noise == doctest::Approx(m.noise).epsilon(1e-15));
}

TEST_CASE("interfering data power scale multiplies exactly the data-driven terms") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  const an::MsceeBreakdown a = an::mscee_tsp(ctx, d, 0, 0, 1.0);
  const an::MsceeBreakdown b = an::mscee_tsp(ctx, d, 0, 0, 2.0);
  CHECK(b.pilot == a.pilot);
  CHECK(b.noise == a.noise);
  CHECK(b.data == doctest::Approx(2.0 * a.data).epsilon(1e-15));
}

TEST_CASE("cancellation removes clustered data and leaves the analytic residuals") {
  auto ctx = toy_context();
  const auto d = toy_drop();
  const double pooled = 5.0 * 4.0 * 0.2;

  SUBCASE("no cluster configured reduces to the plain breakdown") {
    const an::IcMsceeBreakdown ic = an::mscee_ic_tsp(ctx, d, 0, 0);
    const an::MsceeBreakdown plain = an::mscee_tsp(ctx, d, 0, 0);
    CHECK(ic.pilot == plain.pilot);
    CHECK(ic.noise == plain.noise);
    CHECK(ic.data_others == doctest::Approx(plain.data).epsilon(1e-15));
    CHECK(ic.data_residual == 0.0);
    CHECK(ic.noise_residual == 0.0);
  }

  ctx.cluster = {{2}, {}, {}};
  ctx.bs_schedule.reuse_factor = 3;
  ctx.bs_schedule.slot_of_cell = {0, 1, 2};
  ctx.bs_schedule.method = "lattice";

  SUBCASE("dedicated sounding slots leave only the noise residual") {
    const an::IcMsceeBreakdown ic = an::mscee_ic_tsp(ctx, d, 0, 0);
    CHECK(ic.pilot == doctest::Approx(0.15 / 0.2 * 3e-9).epsilon(1e-12));
    CHECK(ic.data_others == 0.0);
    CHECK(ic.data_residual == 0.0);
    // Cancelled cell 2 radiates 25 W; the sounding budget is 2.5 W.
    CHECK(ic.noise_residual ==
          doctest::Approx(25.0 / 2.5 * 8e-15 / pooled).epsilon(1e-12));
    CHECK(ic.noise == doctest::Approx(8e-15 / pooled).epsilon(1e-12));
  }

  SUBCASE("a co-slot sounder bleeds its channel into the data residual") {
    ctx.bs_schedule.reuse_factor = 2;
    ctx.bs_schedule.slot_of_cell = {0, 1, 1};
    const an::IcMsceeBreakdown ic = an::mscee_ic_tsp(ctx, d, 0, 0);
    CHECK(ic.data_residual ==
          doctest::Approx(25.0 * 2e-11 / pooled).epsilon(1e-12));
    CHECK(ic.data_others == 0.0);
  }

  SUBCASE("data scale multiplies every cancellation residual") {
    const an::IcMsceeBreakdown a = an::mscee_ic_tsp(ctx, d, 0, 0, 1.0);
    const an::IcMsceeBreakdown b = an::mscee_ic_tsp(ctx, d, 0, 0, 3.0);
    CHECK(b.pilot == a.pilot);
    CHECK(b.noise == a.noise);
    CHECK(b.noise_residual == doctest::Approx(3.0 * a.noise_residual).epsilon(1e-15));
  }
}

TEST_CASE("lmmse shrink is the scalar mmse update") {
  CHECK(an::lmmse_shrink(1e-7, 5e-8) == doctest::Approx(1e-7 * 5e-8 / 1.5e-7).epsilon(1e-15));
  CHECK(an::lmmse_shrink(2.0, 0.0) == 0.0);
  // Never exceeds either input.
  CHECK(an::lmmse_shrink(1e-9, 1e-3) <= 1e-9);
  CHECK(an::lmmse_shrink(1e-3, 1e-9) <= doctest::Approx(1e-9).epsilon(1e-12));
  CHECK_THROWS_AS(an::lmmse_shrink(0.0, 1e-9), tsp::SimError);
  CHECK_THROWS_AS(an::lmmse_shrink(1e-9, -1e-12), tsp::SimError);
}

TEST_CASE("uplink SINR terms match scalar arithmetic on the toy scenario") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  const an::SinrTerms t = an::ul_terms(ctx, d, 0, 0, 0.5);

  CHECK(t.beta == 1e-7);
  CHECK(t.eps == doctest::Approx(5e-8).epsilon(1e-15));
  // Co-group cell 1, weighted by UL and pilot power ratios.
  const double coh = 0.12 / 0.2 * (0.15 / 0.2) * 3e-9 * 3e-9;
  CHECK(t.coh_per_antenna == doctest::Approx(coh).epsilon(1e-12));
  const double vs = (0.12 / 0.2 * 3e-9 + 0.18 / 0.2 * 6e-10) + 8e-15 / 0.2;
  CHECK(t.varsigma == doctest::Approx(vs).epsilon(1e-9));

  const double num = 101.0 * 1e-14 + 5e-8 * 1e-7;
  const double den = 100.0 * coh + 1.5e-7 * vs;
  CHECK(t.sinr(100.0) == doctest::Approx(num / den).epsilon(1e-9));
  CHECK(an::sinr_ul(ctx, d, 0, 0, 0.5) == doctest::Approx(t.sinr(64.0)).epsilon(1e-15));

  // Without an override the error defaults to the configured LS estimate.
  const an::SinrTerms td = an::ul_terms(ctx, d, 0, 0);
  CHECK(td.eps == doctest::Approx(an::mscee_tsp(ctx, d, 0, 0).total()).epsilon(1e-15));

  // More estimation error can only hurt.
  CHECK(an::sinr_ul(ctx, d, 0, 0, 0.2) > an::sinr_ul(ctx, d, 0, 0, 0.8));
}

TEST_CASE("large-array SINR ceiling is set by coherent interference alone") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  const double coh = 0.12 / 0.2 * (0.15 / 0.2) * 3e-9 * 3e-9;
  const double ceiling = 1e-14 / coh;
  CHECK(an::sinr_ul_asymptote(ctx, d, 0, 0) == doctest::Approx(ceiling).epsilon(1e-12));

  const an::SinrTerms t = an::ul_terms(ctx, d, 0, 0, 0.5);
  CHECK(t.sinr(1e12) == doctest::Approx(ceiling).epsilon(1e-6));

  // Cell 2 is alone in its group: no coherent term, unbounded growth.
  CHECK(std::isinf(an::sinr_ul_asymptote(ctx, d, 2, 0)));
}

TEST_CASE("required array size inverts the SINR curve") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  const an::SinrTerms t = an::ul_terms(ctx, d, 0, 0, 0.5);

  const double target = t.sinr(317.0);
  CHECK(an::antennas_required(ctx, d, 0, 0, target, 0.5) ==
        doctest::Approx(317.0).epsilon(1e-9));
  // The per-user wrapper and the terms-level inversion are the same function.
  CHECK(an::antennas_required(ctx, d, 0, 0, target, 0.5) == an::antennas_for_target(t, target));

  const double lb = an::antennas_required_lower_bound(ctx, d, 0, 0, target, 0.5);
  CHECK(lb == an::antennas_lower_bound_for_target(t, target));
  CHECK(lb <= 317.0 * (1.0 + 1e-12));
  CHECK(lb > 0.0);

  const double ceiling = an::sinr_ul_asymptote(ctx, d, 0, 0);
  CHECK_THROWS_AS(an::antennas_required(ctx, d, 0, 0, ceiling, 0.5), tsp::SimError);
  CHECK_THROWS_AS(an::antennas_required(ctx, d, 0, 0, ceiling * 1.01, 0.5), tsp::SimError);
  CHECK_THROWS_AS(an::antennas_required(ctx, d, 0, 0, 0.0, 0.5), tsp::SimError);
}

TEST_CASE("terms-level array sizing round-trips on synthetic parameters") {
  // Powers of two keep the ceiling target exact, so the at-ceiling throw is
  // deterministic rather than one rounding ulp away from the sign flip.
  an::SinrTerms t;
  t.beta = 0.5;
  t.eps = 0.25;
  t.coh_per_antenna = 0.0009765625;  // 2^-10
  t.varsigma = 0.125;
  t.sectors = 1;

  for (double m : {64.0, 317.0, 4096.0}) {
    const double target = t.sinr(m);
    CHECK(an::antennas_for_target(t, target) == doctest::Approx(m).epsilon(1e-9));
    CHECK(an::antennas_lower_bound_for_target(t, target) <= m * (1.0 + 1e-12));
  }

  // The bound drops the coherent term from the denominator only, so it can
  // never ask for more antennas than the exact inversion.
  an::SinrTerms s = t;
  s.sectors = 3;
  for (double m : {64.0, 1024.0}) {
    const double target = s.sinr(m);
    CHECK(an::antennas_lower_bound_for_target(s, target) <= an::antennas_for_target(s, target));
  }

  const double ceiling = t.beta * t.beta / t.coh_per_antenna;
  CHECK_THROWS_AS(an::antennas_for_target(t, ceiling), tsp::SimError);
  CHECK_THROWS_AS(an::antennas_for_target(t, -1.0), tsp::SimError);
}

TEST_CASE("terms mean averages each field and rejects an empty accumulator") {
  an::SinrTerms a;
  a.beta = 1.0;
  a.eps = 0.5;
  a.coh_per_antenna = 0.25;
  a.varsigma = 0.125;
  a.sectors = 3;
  an::SinrTerms b;
  b.beta = 3.0;
  b.eps = 1.5;
  b.coh_per_antenna = 0.75;
  b.varsigma = 0.375;
  b.sectors = 3;

  an::SinrTermsMean acc;
  CHECK_THROWS_AS(acc.mean(), tsp::SimError);
  acc.add(a);
  acc.add(b);
  const an::SinrTerms m = acc.mean();
  CHECK(m.beta == 2.0);
  CHECK(m.eps == 1.0);
  CHECK(m.coh_per_antenna == 0.5);
  CHECK(m.varsigma == 0.25);
  CHECK(m.sectors == 3);
}

TEST_CASE("crosslink SINR terms match scalar arithmetic on the toy scenario") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  // Target in cell 0 listens to DL while group 1 (cell 2 only) sounds.
  const an::SinrTerms t = an::cl_terms(ctx, d, 0, 0, -1, 0.5);

  const double coh = (1.5e-7 / 1.35e-7) * (30.0 / 39.8) * (0.2 / 0.15) * 2e-9 * 2e-9;
  CHECK(t.coh_per_antenna == doctest::Approx(coh).epsilon(1e-12));

  // MS(0,0) at (0,40) and MS(2,0) at (0,2040) are exactly 2 km apart and
  // shadowing is disabled, so the leak is pure pathloss.
  const double leak = 0.1 / 39.8 * std::pow(2000.0, -3.8);
  const double vs = (30.0 / 39.8) * 2e-9 + leak + 8e-15 / 39.8;
  CHECK(t.varsigma == doctest::Approx(vs).epsilon(1e-9));

  const double num = 65.0 * 1e-14 + 5e-8 * 1e-7;
  const double den = 64.0 * coh + 1.5e-7 * vs;
  CHECK(t.sinr(64.0) == doctest::Approx(num / den).epsilon(1e-9));
  CHECK(an::sinr_cl(ctx, d, 0, 0, -1, 0.5) == doctest::Approx(t.sinr(64.0)).epsilon(1e-15));
}

TEST_CASE("pure-downlink SINR adds the silent group's data back in") {
  const auto ctx = toy_context();
  const auto d = toy_drop();
  const an::SinrTerms t = an::pd_terms(ctx, d, 0, 0, 0.5);

  const double coh = (1.5e-7 / 1.35e-7) * (30.0 / 39.8) * (0.2 / 0.15) * 2e-9 * 2e-9;
  CHECK(t.coh_per_antenna == doctest::Approx(coh).epsilon(1e-12));
  const double vs = (30.0 / 39.8) * 2e-9 + (25.0 / 39.8) * 4e-10 + 8e-15 / 39.8;
  CHECK(t.varsigma == doctest::Approx(vs).epsilon(1e-9));

  // Asking for the listener's own group during sounding degrades to pure DL:
  // its cells transmit no pilots then, so nothing changes.
  const an::SinrTerms own = an::cl_terms(ctx, d, 0, 0, /*pilot_group=*/0, 0.5);
  CHECK(own.coh_per_antenna == t.coh_per_antenna);
  CHECK(own.varsigma == t.varsigma);
  CHECK(an::sinr_pd(ctx, d, 0, 0, 0.5) == doctest::Approx(t.sinr(64.0)).epsilon(1e-15));
}

TEST_CASE("sectorization rescales exactly the interference it splits") {
  auto ctx = toy_context();
  ctx.cluster = {{2}, {}, {}};
  ctx.bs_schedule.reuse_factor = 3;
  ctx.bs_schedule.slot_of_cell = {0, 1, 2};
  ctx.bs_schedule.method = "lattice";
  const auto d = toy_drop();

  auto ctx3 = ctx;
  ctx3.config.sectors = 3;

  const an::MsceeBreakdown m1 = an::mscee_tsp(ctx, d, 0, 0);
  const an::MsceeBreakdown m3 = an::mscee_tsp(ctx3, d, 0, 0);
  CHECK(m3.pilot == doctest::Approx(m1.pilot / 3.0).epsilon(1e-15));
  CHECK(m3.noise == doctest::Approx(m1.noise / 3.0).epsilon(1e-15));
  CHECK(m3.data == doctest::Approx(m1.data).epsilon(1e-15));

  const an::IcMsceeBreakdown i1 = an::mscee_ic_tsp(ctx, d, 0, 0);
  const an::IcMsceeBreakdown i3 = an::mscee_ic_tsp(ctx3, d, 0, 0);
  CHECK(i3.data_others == doctest::Approx(i1.data_others).epsilon(1e-15));
  CHECK(i3.data_residual == doctest::Approx(i1.data_residual / 3.0).epsilon(1e-15));
  CHECK(i3.noise_residual == doctest::Approx(i1.noise_residual / 3.0).epsilon(1e-15));

  // The SINR gain from sectorizing grows with the array and saturates at the
  // sector count, because only the coherent term is divided.
  const an::SinrTerms t1 = an::ul_terms(ctx, d, 0, 0, 0.5);
  const an::SinrTerms t3 = an::ul_terms(ctx3, d, 0, 0, 0.5);
  CHECK(t3.sectors == 3);
  double prev = 0.0;
  for (double m : {1.0, 10.0, 100.0, 1e4, 1e8}) {
    const double gain = t3.sinr(m) / t1.sinr(m);
    CHECK(gain >= 1.0);
    CHECK(gain < 3.0);
    CHECK(gain > prev);
    prev = gain;
  }
  CHECK(t3.sinr(1e12) / t1.sinr(1e12) == doctest::Approx(3.0).epsilon(1e-3));
}

TEST_CASE("uniform power and noise rescaling leaves every ratio metric unchanged") {
  const auto ctx0 = toy_context();
  const auto d0 = toy_drop();

  auto ctx = ctx0;
  auto d = d0;
  const double c = 7.3;
  for (auto& v : d.pilot_power_) v *= c;
  for (auto& v : d.ul_power_) v *= c;
  for (auto& v : d.dl_power_) v *= c;
  ctx.noise_w *= c;
  ctx.bs_pilot_power_w *= c;

  CHECK(an::sinr_ul(ctx, d, 0, 0, 0.5) ==
        doctest::Approx(an::sinr_ul(ctx0, d0, 0, 0, 0.5)).epsilon(1e-12));
  CHECK(an::sinr_cl(ctx, d, 0, 0, -1, 0.5) ==
        doctest::Approx(an::sinr_cl(ctx0, d0, 0, 0, -1, 0.5)).epsilon(1e-12));
  CHECK(an::sinr_pd(ctx, d, 0, 0, 0.5) ==
        doctest::Approx(an::sinr_pd(ctx0, d0, 0, 0, 0.5)).epsilon(1e-12));

  const an::MsceeBreakdown a = an::mscee_tsp(ctx0, d0, 0, 0);
  const an::MsceeBreakdown b = an::mscee_tsp(ctx, d, 0, 0);
  CHECK(b.pilot == doctest::Approx(a.pilot).epsilon(1e-12));
  CHECK(b.data == doctest::Approx(a.data).epsilon(1e-12));
  CHECK(b.noise == doctest::Approx(a.noise).epsilon(1e-12));
}

TEST_CASE("minimum profitable sounding window behaves like the closed form") {
  // Cancellation that does not improve SINR can never pay off.
  CHECK(std::isinf(an::min_bs_coherence_symbols(128, 18, 5, 10.0, 10.0)));
  CHECK(std::isinf(an::min_bs_coherence_symbols(128, 18, 5, 10.0, 9.99)));

  const double r = std::log2(11.0) / std::log2(1001.0);
  CHECK(an::min_bs_coherence_symbols(128, 18, 5, 10.0, 1000.0) ==
        doctest::Approx(128.0 * 19.0 / (5.0 * (1.0 - r))).epsilon(1e-12));

  // Reusing DL data as the sounding reference saves one slot.
  CHECK(an::min_bs_coherence_symbols(128, 18, 5, 10.0, 1000.0, true) ==
        doctest::Approx(128.0 * 18.0 / (5.0 * (1.0 - r))).epsilon(1e-12));

  // A better cancelled SINR shortens the break-even window, which always
  // stays above the raw overhead floor.
  const double floor = 128.0 * 19.0 / 5.0;
  const double t20 = an::min_bs_coherence_symbols(128, 18, 5, 10.0, 20.0);
  const double t40 = an::min_bs_coherence_symbols(128, 18, 5, 10.0, 40.0);
  const double thuge = an::min_bs_coherence_symbols(128, 18, 5, 10.0, 1e50);
  CHECK(t20 > t40);
  CHECK(t40 > thuge);
  CHECK(thuge > floor);

  CHECK_THROWS_AS(an::min_bs_coherence_symbols(0, 18, 5, 1.0, 2.0), tsp::SimError);
  CHECK_THROWS_AS(an::min_bs_coherence_symbols(128, -1, 5, 1.0, 2.0), tsp::SimError);
  CHECK_THROWS_AS(an::min_bs_coherence_symbols(128, 18, 0, 1.0, 2.0), tsp::SimError);
}

TEST_CASE("sounding pilot lengths follow the estimator") {
  CHECK(an::ls_bs_pilot_length(64) == 64);
  CHECK(an::ls_bs_pilot_length(1) == 1);
  CHECK_THROWS_AS(an::ls_bs_pilot_length(0), tsp::SimError);

  CHECK(an::cs_pilot_length(4, 64) == 20);    // 4 * log2(32)
  CHECK(an::cs_pilot_length(16, 64) == 48);   // 16 * log2(8)
  CHECK(an::cs_pilot_length(64, 64) == 64);   // floor at the sparsity itself
  CHECK(an::cs_pilot_length(1, 64) == 7);     // ceil(log2(128))
  CHECK_THROWS_AS(an::cs_pilot_length(0, 64), tsp::SimError);
  CHECK_THROWS_AS(an::cs_pilot_length(4, 0), tsp::SimError);
}

TEST_CASE("net rates charge the pilot and sounding overheads") {
  tsp::frame::FrameConfig f;
  CHECK(an::spectral_efficiency(f, 7.0) ==
        doctest::Approx(181.0 / 185.0 * 3.0).epsilon(1e-15));

  const double bs_ratio = 1.0 - 128.0 * 19.0 / (5.0 * 500.0 * 185.0);
  CHECK(an::spectral_efficiency_ic(f, 15.0, 128, 18) ==
        doctest::Approx(181.0 / 185.0 * bs_ratio * 4.0).epsilon(1e-12));

  const double bs_ratio_dap = 1.0 - 128.0 * 18.0 / (5.0 * 500.0 * 185.0);
  CHECK(an::spectral_efficiency_ic(f, 15.0, 128, 18, true) ==
        doctest::Approx(181.0 / 185.0 * bs_ratio_dap * 4.0).epsilon(1e-12));

  // The cancellation overhead can only reduce the rate at equal SINR.
  CHECK(an::spectral_efficiency_ic(f, 15.0, 128, 18) < an::spectral_efficiency(f, 15.0));
}

TEST_CASE("configured estimator feeds the SINR error term") {
  auto ctx = toy_context();
  const auto d = toy_drop();

  ctx.config.ms_estimator = "lmmse";
  const double ls = an::mscee_tsp(ctx, d, 0, 0).total();
  CHECK(an::user_mscee(ctx, d, 0, 0) ==
        doctest::Approx(an::lmmse_shrink(1e-7, ls)).epsilon(1e-15));

  ctx.config.ms_estimator = "ls";
  ctx.config.ic_cluster = 1;
  ctx.cluster = {{2}, {}, {}};
  ctx.bs_schedule.reuse_factor = 3;
  ctx.bs_schedule.slot_of_cell = {0, 1, 2};
  ctx.bs_schedule.method = "lattice";
  CHECK(an::user_mscee(ctx, d, 0, 0) ==
        doctest::Approx(an::mscee_ic_tsp(ctx, d, 0, 0).total()).epsilon(1e-15));
}
