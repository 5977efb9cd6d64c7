#include "tsp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tsp::est {

Eigen::MatrixXcd ls_ms_estimate(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& book,
                                const std::vector<double>& pilot_power_w) {
  const int pooled = static_cast<int>(y.cols());
  if (book.rows() != pooled || book.cols() != pooled) {
    throw SimError("ls_ms_estimate: pilot book does not match the observation width");
  }
  const int users = static_cast<int>(pilot_power_w.size());
  if (users > pooled) throw SimError("ls_ms_estimate: more users than pilot sequences");
  Eigen::MatrixXcd est(y.rows(), users);
  for (int k = 0; k < users; ++k) {
    if (pilot_power_w[k] <= 0.0) throw SimError("ls_ms_estimate: pilot power must be > 0");
    est.col(k) = y * book.row(k).adjoint() / (pooled * std::sqrt(pilot_power_w[k]));
  }
  return est;
}

Eigen::MatrixXcd ls_bs_estimate(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& p,
                                double rho) {
  if (rho <= 0.0) throw SimError("ls_bs_estimate: pilot power must be > 0");
  if (y.cols() != p.cols()) throw SimError("ls_bs_estimate: observation/pilot width mismatch");
  return y * p.adjoint() / (static_cast<double>(p.rows()) * std::sqrt(rho));
}

int energy_support_size(const Eigen::MatrixXcd& m, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw SimError("energy_support_size: fraction must lie in (0, 1]");
  }
  const auto n = m.size();
  std::vector<double> mass(static_cast<size_t>(n));
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    mass[static_cast<size_t>(i)] = std::norm(m(i));
    total += mass[static_cast<size_t>(i)];
  }
  if (total == 0.0) return 0;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return mass[a] > mass[b]; });
  double acc = 0.0;
  int count = 0;
  for (int idx : order) {
    acc += mass[idx];
    ++count;
    if (acc >= fraction * total) break;
  }
  return count;
}

Eigen::VectorXcd omp_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& y,
                           int max_support, double tol) {
  const int cols = static_cast<int>(a.cols());
  const int rows = static_cast<int>(a.rows());
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(cols);
  const double y_norm = y.norm();
  if (y_norm == 0.0 || max_support <= 0) return x;

  const int cap = std::min(max_support, rows);
  std::vector<int> support;
  support.reserve(cap);
  std::vector<char> in_support(cols, 0);
  Eigen::VectorXcd residual = y;
  Eigen::MatrixXcd basis(rows, cap);
  Eigen::VectorXcd coef;

  for (int it = 0; it < cap; ++it) {
    // Most correlated unused column, normalized so column scaling is moot.
    int best = -1;
    double best_score = 0.0;
    for (int c = 0; c < cols; ++c) {
      if (in_support[c]) continue;
      const double col_norm2 = a.col(c).squaredNorm();
      if (col_norm2 == 0.0) continue;
      const double score = std::norm(a.col(c).dot(residual)) / col_norm2;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    if (best < 0) break;
    in_support[best] = 1;
    support.push_back(best);
    basis.col(it) = a.col(best);

    coef = basis.leftCols(it + 1).colPivHouseholderQr().solve(y);
    residual = y - basis.leftCols(it + 1) * coef;
    if (residual.norm() <= tol * y_norm) break;
  }
  for (size_t i = 0; i < support.size(); ++i) x(support[i]) = coef(static_cast<Eigen::Index>(i));
  return x;
}

Eigen::MatrixXcd cs_matrix_estimate(const Eigen::MatrixXcd& ybar, const Eigen::MatrixXcd& pbar,
                                    int per_column_support, double tol) {
  if (ybar.rows() != pbar.rows()) throw SimError("cs_matrix_estimate: measurement mismatch");
  Eigen::MatrixXcd gbar(pbar.cols(), ybar.cols());
  for (Eigen::Index c = 0; c < ybar.cols(); ++c) {
    gbar.col(c) = omp_solve(pbar, ybar.col(c), per_column_support, tol);
  }
  return gbar;
}

}  // namespace tsp::est
