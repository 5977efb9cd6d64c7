#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tsp/scenario.hpp"

namespace tsp::sig {

// Unit-modulus orthogonal sequence set: len x len matrix whose rows satisfy
// row_i * row_j^H = len * delta_ij.
Eigen::MatrixXcd pilot_book(int len);

// DFT matrix; unitary scaling gives F F^H = I, plain gives unit-modulus
// entries with F F^H = m I.
Eigen::MatrixXcd dft_matrix(int m, bool unitary = true);

// Deterministic small-scale draws. rep indexes the fading realization inside
// one drop; epoch 0 is the current frame, 1 the previous one.
Eigen::VectorXcd ms_bs_channel(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int j, int k, int rep, int epoch = 0);
Eigen::MatrixXcd bs_bs_channel(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int from, int rep);
// Scalar MS-to-MS channel including its large-scale gain.
cplx ms_ms_channel(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   int j, int k, int rep);

// Column-normalized conjugate beams.
Eigen::MatrixXcd mf_precoder(const Eigen::MatrixXcd& est);
// Regularized zero-forcing beams (column-normalized) and the matching
// detector rows (users x antennas).
Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& est);
Eigen::MatrixXcd mf_detector(const Eigen::MatrixXcd& est);
Eigen::MatrixXcd zf_detector(const Eigen::MatrixXcd& est);

// Cell d's own view of its user channels: the true channels plus white
// estimation error matching the cell's analytical MSCEE. Used for precoders
// of cells whose estimates are never composed explicitly.
Eigen::MatrixXcd surrogate_cell_estimate(const scen::ScenarioContext& ctx,
                                         const scen::DropState& d, int cell, int rep, int epoch);

// Precoder matrix for a cell per the configured scheme.
Eigen::MatrixXcd cell_precoder(const scen::ScenarioContext& ctx, const Eigen::MatrixXcd& est);

// Precoded DL block sum_k sqrt(rho_dk) w_k x_k(t) over `symbols` symbols.
Eigen::MatrixXcd dl_block(const scen::ScenarioContext& ctx, const scen::DropState& d, int cell,
                          const Eigen::MatrixXcd& precoder, int rep, int epoch, int symbols);

// Received pilot block at BS l during its group's sounding window, with the
// ground-truth own-user channels and the DL blocks of the cells this BS will
// try to cancel.
struct PilotObservation {
  Eigen::MatrixXcd y;    // M x pooled resources
  Eigen::MatrixXcd own;  // M x users, true channels of own users
  std::vector<std::pair<int, Eigen::MatrixXcd>> cluster_blocks;  // (cell, its DL block)
};
PilotObservation compose_pilot(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int rep);

// Own-user channel estimates from a received pilot block (LS, plus the scalar
// MMSE refinement when configured). Pass the raw or cancellation-cleaned y.
Eigen::MatrixXcd ms_estimate(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                             const Eigen::MatrixXcd& y);

// BS-BS cross-link estimate of G from `from` as seen by l, per the configured
// BS estimator. Draws are consistent with compose_pilot for the same rep.
Eigen::MatrixXcd bs_cross_estimate(const scen::ScenarioContext& ctx, const scen::DropState& d,
                                   int l, int from, int rep);

// Subtracts the reconstructed DL interference of the clustered cells from the
// observation (returns the cleaned M x pooled block).
Eigen::MatrixXcd cancel_cluster_interference(const scen::ScenarioContext& ctx,
                                             const scen::DropState& d, int l, int rep,
                                             const PilotObservation& obs);

// Support size a compressed BS-BS estimate uses at array size m: the
// configured override, or a measured energy-support size on a fresh sample.
int cs_support_size(const scen::ScenarioContext& ctx, const scen::DropState& d, int rep);

}  // namespace tsp::sig
