#pragma once

#include <Eigen/Dense>

#include "tsp/common.hpp"
#include "tsp/rng.hpp"

namespace tsp::chan {

// Distance-based power gain d^(-eta). Distances must be strictly positive;
// user placement keeps an exclusion disc around each BS so this never fires
// in normal operation.
double pathloss_gain(double distance_m, double exponent);

// Log-normal shadow fading factor 10^(sigma_db * z / 10) with z ~ N(0,1).
double lognormal_shadow(rng::Stream& stream, double sigma_db);

// Mean of the shadow factor, exp((sigma_db * ln10 / 10)^2 / 2).
double lognormal_shadow_mean(double sigma_db);

// Exponential antenna correlation [R]_pq = kappa^|p-q| (real symmetric).
Eigen::MatrixXd exp_corr_matrix(int m, double kappa);

// Symmetric PSD square root via eigendecomposition; negative eigenvalues from
// roundoff are clipped to zero.
Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd& a);

// Uniform linear array steering vector [e^(j*pi*p*sin(angle))], p = 0..m-1.
Eigen::VectorXcd steering(int m, double angle_rad);

// Rank-one line-of-sight term a_rx(theta) * a_tx(phi)^H. Broadside angles
// (the default) give the all-ones matrix.
Eigen::MatrixXcd los_component(int m_rx, int m_tx, double theta_rx = 0.0, double phi_tx = 0.0);

// Ricean BS-to-BS channel sqrt(alpha) * D where
//   D = sqrt(k/(1+k)) * LOS + sqrt(1/(1+k)) * R^(1/2) H R^(1/2),
// H iid CN(0,1). E||G||_F^2 = alpha * m^2 for any kappa and k.
Eigen::MatrixXcd sample_bs_bs(rng::Stream& stream, int m, double alpha, double ricean_k,
                              const Eigen::MatrixXd& corr_sqrt, double theta_rx = 0.0,
                              double phi_tx = 0.0);

// Rayleigh MS-to-BS channel sqrt(beta) * h, h ~ CN(0, I_m).
Eigen::VectorXcd sample_ms_bs(rng::Stream& stream, int m, double beta);

}  // namespace tsp::chan
