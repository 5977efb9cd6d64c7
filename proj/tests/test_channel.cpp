#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "tsp/channel.hpp"
#include "tsp/common.hpp"
#include "tsp/rng.hpp"

namespace chan = tsp::chan;
using tsp::rng::LinkClass;
using tsp::rng::Stream;

TEST_CASE("pathloss gain is a pure power law") {
  CHECK(chan::pathloss_gain(1.0, 3.8) == doctest::Approx(1.0));
  CHECK(chan::pathloss_gain(2.0, 3.8) == doctest::Approx(std::pow(2.0, -3.8)).epsilon(1e-14));
  CHECK(chan::pathloss_gain(866.0, 3.8) ==
        doctest::Approx(std::pow(866.0, -3.8)).epsilon(1e-14));
  CHECK_THROWS_AS(chan::pathloss_gain(0.0, 3.8), tsp::SimError);
  CHECK_THROWS_AS(chan::pathloss_gain(-1.0, 3.8), tsp::SimError);
}

TEST_CASE("lognormal shadow statistics") {
  CHECK(chan::lognormal_shadow_mean(0.0) == doctest::Approx(1.0));
  // E{10^(z/10)} = exp((sigma ln10 / 10)^2 / 2) for z ~ N(0, sigma^2).
  double s = 8.0 * std::log(10.0) / 10.0;
  CHECK(chan::lognormal_shadow_mean(8.0) == doctest::Approx(std::exp(s * s / 2.0)).epsilon(1e-12));

  Stream st(4, 0, LinkClass::shadow_ms_bs, 3);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += chan::lognormal_shadow(st, 8.0);
  CHECK(sum / n == doctest::Approx(chan::lognormal_shadow_mean(8.0)).epsilon(0.05));

  Stream z(4, 0, LinkClass::shadow_ms_bs, 4);
  CHECK(chan::lognormal_shadow(z, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("exponential correlation matrix and its square root") {
  auto r = chan::exp_corr_matrix(4, 0.8);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      CHECK(r(p, q) == doctest::Approx(std::pow(0.8, std::abs(p - q))).epsilon(1e-14));

  auto s = chan::matrix_sqrt_psd(r);
  CHECK(((s * s) - r).cwiseAbs().maxCoeff() < 1e-10);

  auto r0 = chan::exp_corr_matrix(5, 0.0);
  CHECK((r0 - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(chan::exp_corr_matrix(4, 1.0), tsp::SimError);
  CHECK_THROWS_AS(chan::exp_corr_matrix(4, -0.1), tsp::SimError);
}

TEST_CASE("steering vectors and the line-of-sight component") {
  auto a = chan::steering(4, 0.0);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(a(i) - tsp::cplx{1.0, 0.0}) < 1e-14);

  auto a30 = chan::steering(8, tsp::kPi / 6.0);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(std::abs(a30(i)) - 1.0) < 1e-14);

  // Broadside LOS block is all ones and carries squared norm M^2.
  auto los = chan::los_component(16, 16);
  CHECK(los.rows() == 16);
  CHECK(los.cols() == 16);
  CHECK((los - Eigen::MatrixXcd::Ones(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(los.squaredNorm() == doctest::Approx(16.0 * 16.0).epsilon(1e-12));

  auto tilted = chan::los_component(8, 8, tsp::kPi / 5.0, -tsp::kPi / 7.0);
  CHECK(tilted.squaredNorm() == doctest::Approx(64.0).epsilon(1e-12));
  // Rank one: second singular value vanishes.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tilted);
  CHECK(svd.singularValues()(1) < 1e-10);
}

TEST_CASE("bs-bs sample keeps unit average entry power times alpha") {
  const int m = 32;
  const double alpha = 3.7e-11;
  auto corr = chan::matrix_sqrt_psd(chan::exp_corr_matrix(m, 0.8));
  Stream st(6, 0, LinkClass::small_scale_bs_bs, 11);
  double acc = 0.0;
  const int draws = 400;
  for (int i = 0; i < draws; ++i) {
    auto g = chan::sample_bs_bs(st, m, alpha, 10.0, corr);
    acc += g.squaredNorm();
  }
  // E||G||_F^2 = alpha * M^2: LOS carries M^2 exactly and the scattering part
  // is trace-preserving under the correlation model.
  double mean = acc / draws;
  CHECK(mean / (alpha * m * m) == doctest::Approx(1.0).epsilon(0.02));

  // A huge Ricean factor pins the sample to the LOS component.
  auto g_inf = chan::sample_bs_bs(st, 8, 1.0, 1e12, chan::matrix_sqrt_psd(chan::exp_corr_matrix(8, 0.8)));
  CHECK((g_inf - chan::los_component(8, 8)).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("ms-bs sample is rayleigh with per-antenna power beta") {
  const int m = 64;
  const double beta = 2.5e-8;
  Stream st(7, 0, LinkClass::small_scale_ms_bs, 13);
  double acc = 0.0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) acc += chan::sample_ms_bs(st, m, beta).squaredNorm();
  // ||h||^2 / beta ~ (1/2) chi^2_{2M}: mean M, sd sqrt(M).
  double mean = acc / draws / beta;
  double se = std::sqrt(static_cast<double>(m)) / std::sqrt(static_cast<double>(draws));
  CHECK(std::abs(mean - m) < 4.0 * se);
}
