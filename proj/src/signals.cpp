#include "tsp/signals.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "tsp/analytics.hpp"
#include "tsp/channel.hpp"
#include "tsp/estimation.hpp"
#include "tsp/frame.hpp"

namespace tsp::sig {

namespace {

// Stream ids carry (epoch, rep, cell, entity); entity is a user id, a peer
// cell, or a purpose tag for noise blocks.
std::uint64_t link_id(int rep, int epoch, int cell, int entity) {
  return (static_cast<std::uint64_t>(epoch) << 44) | (static_cast<std::uint64_t>(rep) << 32) |
         (static_cast<std::uint64_t>(cell) << 16) | static_cast<std::uint64_t>(entity);
}

constexpr int kNoisePilot = 0;
constexpr int kNoiseBsSlotBase = 1;

const Eigen::MatrixXd& corr_sqrt_for(int m, double kappa) {
  static std::map<std::pair<int, double>, Eigen::MatrixXd> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, kappa});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(m, kappa),
                       chan::matrix_sqrt_psd(chan::exp_corr_matrix(m, kappa)))
             .first;
  }
  return it->second;
}

void add_noise(rng::Stream& s, double power_w, Eigen::MatrixXcd& y) {
  const double scale = std::sqrt(power_w);
  for (Eigen::Index c = 0; c < y.cols(); ++c) {
    for (Eigen::Index r = 0; r < y.rows(); ++r) y(r, c) += scale * s.cgaussian();
  }
}

}  // namespace

Eigen::MatrixXcd pilot_book(int len) {
  return dft_matrix(len, false);
}

Eigen::MatrixXcd dft_matrix(int m, bool unitary) {
  Eigen::MatrixXcd f(m, m);
  const double scale = unitary ? 1.0 / std::sqrt(static_cast<double>(m)) : 1.0;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      f(r, c) = scale * std::polar(1.0, -2.0 * kPi * r * c / m);
    }
  }
  return f;
}

Eigen::VectorXcd ms_bs_channel(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int j, int k, int rep, int epoch) {
  rng::Stream s(d.seed, d.drop, rng::LinkClass::small_scale_ms_bs,
                link_id(rep, epoch, l, j * ctx.users() + k));
  return chan::sample_ms_bs(s, ctx.antennas(), d.beta(l, j, k));
}

Eigen::MatrixXcd bs_bs_channel(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int from, int rep) {
  rng::Stream s(d.seed, d.drop, rng::LinkClass::small_scale_bs_bs, link_id(rep, 0, l, from));
  return chan::sample_bs_bs(s, ctx.antennas(), d.alpha(l, from), ctx.config.ricean_k,
                            corr_sqrt_for(ctx.antennas(), ctx.config.antenna_corr));
}

cplx ms_ms_channel(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   int j, int k, int rep) {
  const double mu = scen::ms_ms_gain(ctx, d, l, kp, j, k);
  if (mu == 0.0) return {0.0, 0.0};
  const std::uint64_t a = static_cast<std::uint64_t>(l) * ctx.users() + kp;
  const std::uint64_t b = static_cast<std::uint64_t>(j) * ctx.users() + k;
  rng::Stream s(d.seed, d.drop, rng::LinkClass::small_scale_ms_ms,
                (static_cast<std::uint64_t>(rep) << 32) | (std::max(a, b) << 11) | std::min(a, b));
  return std::sqrt(mu) * s.cgaussian();
}

Eigen::MatrixXcd mf_precoder(const Eigen::MatrixXcd& est) {
  Eigen::MatrixXcd w = est.conjugate();
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    const double n = w.col(c).norm();
    if (n > 0.0) w.col(c) /= n;
  }
  return w;
}

namespace {

Eigen::MatrixXcd regularized_gram_inverse(const Eigen::MatrixXcd& est) {
  const Eigen::Index k = est.cols();
  Eigen::MatrixXcd gram = est.adjoint() * est;
  const double lam = 1e-10 * gram.trace().real() / static_cast<double>(k);
  gram += lam * Eigen::MatrixXcd::Identity(k, k);
  return gram.inverse();
}

}  // namespace

Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& est) {
  Eigen::MatrixXcd w = (est * regularized_gram_inverse(est)).conjugate();
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    const double n = w.col(c).norm();
    if (n > 0.0) w.col(c) /= n;
  }
  return w;
}

Eigen::MatrixXcd mf_detector(const Eigen::MatrixXcd& est) { return est.adjoint(); }

Eigen::MatrixXcd zf_detector(const Eigen::MatrixXcd& est) {
  return regularized_gram_inverse(est) * est.adjoint();
}

Eigen::MatrixXcd surrogate_cell_estimate(const scen::ScenarioContext& ctx,
                                         const scen::DropState& d, int cell, int rep,
                                         int epoch) {
  const int m = ctx.antennas();
  const int users = ctx.users();
  Eigen::MatrixXcd est(m, users);
  for (int k = 0; k < users; ++k) {
    const double eps = analytics::user_mscee(ctx, d, cell, k);
    rng::Stream s(d.seed, d.drop, rng::LinkClass::surrogate_estimate,
                  link_id(rep, epoch, cell, k));
    Eigen::VectorXcd err(m);
    const double scale = std::sqrt(eps);
    for (int p = 0; p < m; ++p) err(p) = scale * s.cgaussian();
    est.col(k) = ms_bs_channel(ctx, d, cell, cell, k, rep, epoch) + err;
  }
  return est;
}

Eigen::MatrixXcd cell_precoder(const scen::ScenarioContext& ctx, const Eigen::MatrixXcd& est) {
  return ctx.config.precoder == "zf" ? zf_precoder(est) : mf_precoder(est);
}

Eigen::MatrixXcd dl_block(const scen::ScenarioContext& ctx, const scen::DropState& d, int cell,
                          const Eigen::MatrixXcd& precoder, int rep, int epoch, int symbols) {
  const int users = ctx.users();
  Eigen::MatrixXcd data(users, symbols);
  for (int k = 0; k < users; ++k) {
    rng::Stream s(d.seed, d.drop, rng::LinkClass::data_symbols, link_id(rep, epoch, cell, k));
    const double amp = std::sqrt(d.dl_power(cell, k));
    for (int t = 0; t < symbols; ++t) data(k, t) = amp * s.cgaussian();
  }
  return precoder * data;
}

PilotObservation compose_pilot(const scen::ScenarioContext& ctx, const scen::DropState& d,
                               int l, int rep) {
  const int m = ctx.antennas();
  const int users = ctx.users();
  const int pooled = ctx.config.frame.subcarriers * ctx.config.frame.pilot_symbols;
  if (users > pooled) {
    throw SimError("compose_pilot: more users than pooled pilot resources");
  }
  if (ctx.config.sectors != 1) {
    throw SimError("compose_pilot: signal-level path supports a single sector only");
  }
  const Eigen::MatrixXcd book = pilot_book(pooled);
  const int g = ctx.group_of_cell[l];

  PilotObservation obs;
  obs.y = Eigen::MatrixXcd::Zero(m, pooled);
  obs.own = Eigen::MatrixXcd::Zero(m, users);

  for (int j : ctx.group_cells[g]) {
    for (int k = 0; k < users; ++k) {
      const Eigen::VectorXcd gch = ms_bs_channel(ctx, d, l, j, k, rep, 0);
      obs.y += std::sqrt(d.pilot_power(j, k)) * gch * book.row(k);
      if (j == l) obs.own.col(k) = gch;
    }
  }

  const std::vector<int> no_cluster;
  const std::vector<int>& cluster = ctx.cluster.empty() ? no_cluster : ctx.cluster[l];
  for (int dd = 0; dd < ctx.cells(); ++dd) {
    if (ctx.group_of_cell[dd] == g) continue;
    const int epoch =
        static_cast<int>(frame::precoder_epoch(g, ctx.group_of_cell[dd]));
    const Eigen::MatrixXcd est = surrogate_cell_estimate(ctx, d, dd, rep, epoch);
    const Eigen::MatrixXcd block = dl_block(ctx, d, dd, cell_precoder(ctx, est), rep, epoch, pooled);
    obs.y += bs_bs_channel(ctx, d, l, dd, rep) * block;
    if (std::binary_search(cluster.begin(), cluster.end(), dd)) {
      obs.cluster_blocks.emplace_back(dd, block);
    }
  }

  rng::Stream ns(d.seed, d.drop, rng::LinkClass::noise, link_id(rep, 0, l, kNoisePilot));
  add_noise(ns, ctx.noise_w, obs.y);
  return obs;
}

Eigen::MatrixXcd ms_estimate(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                             const Eigen::MatrixXcd& y) {
  const int users = ctx.users();
  std::vector<double> powers(users);
  for (int k = 0; k < users; ++k) powers[k] = d.pilot_power(l, k);
  Eigen::MatrixXcd est =
      est::ls_ms_estimate(y, pilot_book(static_cast<int>(y.cols())), powers);
  if (ctx.config.ms_estimator == "lmmse") {
    for (int k = 0; k < users; ++k) {
      const double beta = d.beta(l, l, k);
      const double eps = analytics::user_mscee(ctx, d, l, k);
      est.col(k) *= beta / (beta + eps);
    }
  }
  return est;
}

int cs_support_size(const scen::ScenarioContext& ctx, const scen::DropState& d, int rep) {
  if (ctx.config.cs_sparsity > 0) return ctx.config.cs_sparsity;
  const int m = ctx.antennas();
  // Measure on a unit-gain channel sample: the largest per-column support
  // needed to keep the configured energy fraction in the transformed domain.
  rng::Stream s(d.seed, d.drop, rng::LinkClass::small_scale_bs_bs,
                link_id(rep, 1, 0xFFFF, 0xFFFF));
  const Eigen::MatrixXcd g = chan::sample_bs_bs(
      s, m, 1.0, ctx.config.ricean_k, corr_sqrt_for(m, ctx.config.antenna_corr));
  const Eigen::MatrixXcd a = dft_matrix(m, true);
  const Eigen::MatrixXcd gbar = a.adjoint() * g.adjoint() * a;
  int smax = 1;
  for (Eigen::Index c = 0; c < gbar.cols(); ++c) {
    smax = std::max(smax, est::energy_support_size(gbar.col(c), ctx.config.cs_accuracy));
  }
  return smax;
}

Eigen::MatrixXcd bs_cross_estimate(const scen::ScenarioContext& ctx, const scen::DropState& d,
                                   int l, int from, int rep) {
  if (ctx.bs_schedule.slot_of_cell.empty()) {
    throw SimError("bs_cross_estimate: no BS sounding schedule (cancellation disabled)");
  }
  const int m = ctx.antennas();
  const int slot = ctx.bs_schedule.slot_of_cell[from];
  if (slot == ctx.bs_schedule.slot_of_cell[l]) {
    throw SimError("bs_cross_estimate: cell shares the observer's sounding slot");
  }
  // The sounding budget is per BS, not per antenna: each antenna radiates a
  // 1/m share, so the LS error variance per entry is noise_w / bs_pilot_power.
  const double rho = ctx.bs_pilot_power_w / m;
  const bool ls = ctx.config.bs_estimator == "ls";

  if (ls) {
    const Eigen::MatrixXcd p = dft_matrix(m, false);  // p * p^H = m * I
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(m, m);
    for (int b : ctx.bs_schedule.coslot_cells(from)) {
      if (b == l) continue;
      y += bs_bs_channel(ctx, d, l, b, rep) * p;
    }
    y *= std::sqrt(rho);
    rng::Stream ns(d.seed, d.drop, rng::LinkClass::noise,
                   link_id(rep, 0, l, kNoiseBsSlotBase + slot));
    add_noise(ns, ctx.noise_w, y);
    return est::ls_bs_estimate(y, p, rho);
  }

  // Compressed sounding: each cell in the slot uses its own short Gaussian
  // pilot; the target's transformed matrix is recovered column-wise and
  // mapped back.
  const int support = cs_support_size(ctx, d, rep);
  const int tau = analytics::cs_pilot_length(support, m);
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(m, tau);
  Eigen::MatrixXcd p_target(m, tau);
  for (int b : ctx.bs_schedule.coslot_cells(from)) {
    if (b == l) continue;
    rng::Stream ps(d.seed, d.drop, rng::LinkClass::pilot_matrix, link_id(rep, 0, b, 0));
    Eigen::MatrixXcd p(m, tau);
    for (int c = 0; c < tau; ++c) {
      for (int r = 0; r < m; ++r) p(r, c) = ps.cgaussian();
    }
    y += bs_bs_channel(ctx, d, l, b, rep) * p;
    if (b == from) p_target = p;
  }
  y *= std::sqrt(rho);
  rng::Stream ns(d.seed, d.drop, rng::LinkClass::noise,
                 link_id(rep, 0, l, kNoiseBsSlotBase + slot));
  add_noise(ns, ctx.noise_w, y);

  const Eigen::MatrixXcd a = dft_matrix(m, true);
  const Eigen::MatrixXcd ybar = y.adjoint() * a;
  const Eigen::MatrixXcd pbar = std::sqrt(rho) * p_target.adjoint() * a;
  const Eigen::MatrixXcd gbar = est::cs_matrix_estimate(ybar, pbar, support);
  return a * gbar.adjoint() * a.adjoint();
}

Eigen::MatrixXcd cancel_cluster_interference(const scen::ScenarioContext& ctx,
                                             const scen::DropState& d, int l, int rep,
                                             const PilotObservation& obs) {
  Eigen::MatrixXcd cleaned = obs.y;
  for (const auto& [cell, block] : obs.cluster_blocks) {
    cleaned -= bs_cross_estimate(ctx, d, l, cell, rep) * block;
  }
  return cleaned;
}

}  // namespace tsp::sig
