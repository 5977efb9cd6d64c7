#include "tsp/channel.hpp"

#include <cmath>

namespace tsp::chan {

double pathloss_gain(double distance_m, double exponent) {
  if (distance_m <= 0.0) throw SimError("pathloss_gain: distance must be > 0");
  return std::pow(distance_m, -exponent);
}

double lognormal_shadow(rng::Stream& stream, double sigma_db) {
  if (sigma_db == 0.0) return 1.0;
  return std::pow(10.0, sigma_db * stream.gaussian() / 10.0);
}

double lognormal_shadow_mean(double sigma_db) {
  const double s = sigma_db * std::log(10.0) / 10.0;
  return std::exp(0.5 * s * s);
}

Eigen::MatrixXd exp_corr_matrix(int m, double kappa) {
  if (m < 1) throw SimError("exp_corr_matrix: dimension must be >= 1");
  if (kappa < 0.0 || kappa >= 1.0) throw SimError("exp_corr_matrix: kappa must be in [0, 1)");
  Eigen::MatrixXd r(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) r(p, q) = std::pow(kappa, std::abs(p - q));
  }
  return r;
}

Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw SimError("matrix_sqrt_psd: eigendecomposition failed");
  Eigen::VectorXd lam = es.eigenvalues();
  for (int i = 0; i < lam.size(); ++i) lam(i) = lam(i) > 0.0 ? std::sqrt(lam(i)) : 0.0;
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::VectorXcd steering(int m, double angle_rad) {
  Eigen::VectorXcd a(m);
  const double phase_step = kPi * std::sin(angle_rad);
  for (int p = 0; p < m; ++p) a(p) = std::polar(1.0, phase_step * p);
  return a;
}

Eigen::MatrixXcd los_component(int m_rx, int m_tx, double theta_rx, double phi_tx) {
  return steering(m_rx, theta_rx) * steering(m_tx, phi_tx).adjoint();
}

Eigen::MatrixXcd sample_bs_bs(rng::Stream& stream, int m, double alpha, double ricean_k,
                              const Eigen::MatrixXd& corr_sqrt, double theta_rx, double phi_tx) {
  if (ricean_k < 0.0) throw SimError("sample_bs_bs: ricean_k must be >= 0");
  Eigen::MatrixXcd h(m, m);
  for (int q = 0; q < m; ++q) {
    for (int p = 0; p < m; ++p) h(p, q) = stream.cgaussian();
  }
  const double w_los = std::sqrt(ricean_k / (1.0 + ricean_k));
  const double w_nlos = std::sqrt(1.0 / (1.0 + ricean_k));
  Eigen::MatrixXcd d = w_nlos * (corr_sqrt * h * corr_sqrt);
  if (w_los > 0.0) d += w_los * los_component(m, m, theta_rx, phi_tx);
  return std::sqrt(alpha) * d;
}

Eigen::VectorXcd sample_ms_bs(rng::Stream& stream, int m, double beta) {
  Eigen::VectorXcd g(m);
  const double s = std::sqrt(beta);
  for (int p = 0; p < m; ++p) g(p) = s * stream.cgaussian();
  return g;
}

}  // namespace tsp::chan
