#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tsp/common.hpp"

namespace tsp::est {

// Per-user LS estimate from a pooled pilot block. y is M x P (P pooled pilot
// resources), book is P x P with rows holding the unit-modulus sequences, and
// pilot_power_w gives each user's pilot power. Column k of the result is
//   y * book.row(k)^H / (P * sqrt(pilot_power_w[k])).
Eigen::MatrixXcd ls_ms_estimate(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& book,
                                const std::vector<double>& pilot_power_w);

// LS estimate of an M x M cross-link matrix from y = sqrt(rho) * G * p + ...,
// with p M x M satisfying p * p^H = M * I:  y * p^H / (M * sqrt(rho)).
Eigen::MatrixXcd ls_bs_estimate(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& p,
                                double rho);

// Smallest number of entries whose squared magnitudes capture `fraction` of
// the total squared Frobenius mass (entries sorted by magnitude, ties by
// linear index).
int energy_support_size(const Eigen::MatrixXcd& m, double fraction);

// Orthogonal matching pursuit: greedily selects at most max_support columns
// of a to explain y, stopping early when the relative residual drops below
// tol; the selected coefficients are re-solved by least squares.
Eigen::VectorXcd omp_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& y,
                           int max_support, double tol = 1e-6);

// Column-wise OMP recovery of a transformed M x M matrix from ybar = pbar *
// gbar (+ perturbation), pbar tau x M. per_column_support caps each column's
// support.
Eigen::MatrixXcd cs_matrix_estimate(const Eigen::MatrixXcd& ybar, const Eigen::MatrixXcd& pbar,
                                    int per_column_support, double tol = 1e-6);

}  // namespace tsp::est
