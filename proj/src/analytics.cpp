#include "tsp/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsp::analytics {

namespace {

double pooled_pilot_energy(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                           int kp) {
  return static_cast<double>(ctx.config.frame.subcarriers) * ctx.config.frame.pilot_symbols *
         d.pilot_power(l, kp);
}

}  // namespace

MsceeBreakdown mscee_tsp(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp, double data_scale) {
  const int g = ctx.group_of_cell[l];
  const double rho_p = d.pilot_power(l, kp);
  const double pooled = pooled_pilot_energy(ctx, d, l, kp);
  const double sectors = ctx.config.sectors;

  MsceeBreakdown out;
  for (int j : ctx.group_cells[g]) {
    if (j == l) continue;
    out.pilot += d.pilot_power(j, kp) / rho_p * d.beta(l, j, kp);
  }
  for (int dd = 0; dd < ctx.cells(); ++dd) {
    if (ctx.group_of_cell[dd] == g) continue;
    out.data += d.dl_total(dd) * d.alpha(l, dd);
  }
  out.pilot /= sectors;
  out.data *= data_scale / pooled;
  out.noise = ctx.noise_w / pooled / sectors;
  return out;
}

IcMsceeBreakdown mscee_ic_tsp(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                              int kp, double data_scale) {
  const int g = ctx.group_of_cell[l];
  const double pooled = pooled_pilot_energy(ctx, d, l, kp);
  const double sectors = ctx.config.sectors;
  const bool have_schedule = !ctx.bs_schedule.slot_of_cell.empty();

  IcMsceeBreakdown out;
  const MsceeBreakdown base = mscee_tsp(ctx, d, l, kp, data_scale);
  out.pilot = base.pilot;
  out.noise = base.noise;

  const std::vector<int> no_cluster;
  const std::vector<int>& cluster = ctx.cluster.empty() ? no_cluster : ctx.cluster[l];
  for (int dd = 0; dd < ctx.cells(); ++dd) {
    if (ctx.group_of_cell[dd] == g) continue;
    const bool cancelled =
        std::binary_search(cluster.begin(), cluster.end(), dd);
    if (!cancelled) {
      out.data_others += d.dl_total(dd) * d.alpha(l, dd);
      continue;
    }
    // Cancelled cells leave behind (a) the co-slot channels that leaked into
    // the LS BS-BS estimate and (b) receiver noise folded through it.
    if (have_schedule) {
      for (int b : ctx.bs_schedule.coslot_cells(dd)) {
        if (b != dd) out.data_residual += d.dl_total(dd) * d.alpha(l, b);
      }
    }
    out.noise_residual += d.dl_total(dd) / ctx.bs_pilot_power_w * ctx.noise_w;
  }
  out.data_others *= data_scale / pooled;
  out.data_residual *= data_scale / pooled / sectors;
  out.noise_residual *= data_scale / pooled / sectors;
  return out;
}

double lmmse_shrink(double beta, double ls_mscee) {
  if (beta <= 0.0) throw SimError("lmmse_shrink: beta must be > 0");
  if (ls_mscee < 0.0) throw SimError("lmmse_shrink: mscee must be >= 0");
  return beta * ls_mscee / (beta + ls_mscee);
}

double user_mscee(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                  double data_scale) {
  const double ls = ctx.config.ic_cluster > 0 ? mscee_ic_tsp(ctx, d, l, kp, data_scale).total()
                                              : mscee_tsp(ctx, d, l, kp, data_scale).total();
  if (ctx.config.ms_estimator == "lmmse") return lmmse_shrink(d.beta(l, l, kp), ls);
  return ls;
}

namespace {

double eps_for(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               double eps_ratio) {
  if (eps_ratio >= 0.0) return eps_ratio * d.beta(l, l, kp);
  return user_mscee(ctx, d, l, kp);
}

}  // namespace

SinrTerms ul_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   double eps_ratio) {
  const int g = ctx.group_of_cell[l];
  SinrTerms t;
  t.sectors = ctx.config.sectors;
  t.beta = d.beta(l, l, kp);
  t.eps = eps_for(ctx, d, l, kp, eps_ratio);

  const double rho_ul = d.ul_power(l, kp);
  const double rho_p = d.pilot_power(l, kp);
  for (int j : ctx.group_cells[g]) {
    if (j == l) continue;
    const double b = d.beta(l, j, kp);
    t.coh_per_antenna += d.ul_power(j, kp) / rho_ul * (d.pilot_power(j, kp) / rho_p) * b * b;
  }
  double sum = 0.0;
  for (int j = 0; j < ctx.cells(); ++j) {
    for (int k = 0; k < ctx.users(); ++k) {
      sum += d.ul_power(j, k) / rho_ul * d.beta(l, j, k);
    }
  }
  t.varsigma = sum - t.beta + ctx.noise_w / rho_ul;
  return t;
}

namespace {

// Coherent DL interference from cells sharing the target's pilot sequence:
// their precoders partially point at the target user.
double dl_coherent(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   double beta, double eps, double eps_ratio) {
  const int g = ctx.group_of_cell[l];
  const double rho_dl = d.dl_power(l, kp);
  const double rho_p = d.pilot_power(l, kp);
  double coh = 0.0;
  for (int j : ctx.group_cells[g]) {
    if (j == l) continue;
    const double beta_jj = d.beta(j, j, kp);
    const double eps_jj =
        eps_ratio >= 0.0 ? eps_ratio * beta_jj : user_mscee(ctx, d, j, kp);
    const double cross = d.beta(j, l, kp);
    coh += (beta + eps) / (beta_jj + eps_jj) * (d.dl_power(j, kp) / rho_dl) *
           (rho_p / d.pilot_power(j, kp)) * cross * cross;
  }
  return coh;
}

}  // namespace

SinrTerms cl_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   int pilot_group, double eps_ratio) {
  const int g = ctx.group_of_cell[l];
  const int q = pilot_group < 0 ? (g + 1) % ctx.groups : pilot_group;
  if (q == g) return pd_terms(ctx, d, l, kp, eps_ratio);

  SinrTerms t;
  t.sectors = ctx.config.sectors;
  t.beta = d.beta(l, l, kp);
  t.eps = eps_for(ctx, d, l, kp, eps_ratio);
  t.coh_per_antenna = dl_coherent(ctx, d, l, kp, t.beta, t.eps, eps_ratio);

  const double rho_dl = d.dl_power(l, kp);
  double sum = 0.0;
  for (int j = 0; j < ctx.cells(); ++j) {
    if (ctx.group_of_cell[j] == q) continue;  // sounding cells are silent on DL
    sum += d.dl_total(j) / rho_dl * d.beta(j, l, kp);
  }
  double pilot_leak = 0.0;
  for (int j : ctx.group_cells[q]) {
    for (int k = 0; k < ctx.users(); ++k) {
      pilot_leak += d.pilot_power(j, k) / rho_dl * scen::ms_ms_gain(ctx, d, l, kp, j, k);
    }
  }
  t.varsigma = sum - t.beta + pilot_leak + ctx.noise_w / rho_dl;
  return t;
}

SinrTerms pd_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   double eps_ratio) {
  SinrTerms t;
  t.sectors = ctx.config.sectors;
  t.beta = d.beta(l, l, kp);
  t.eps = eps_for(ctx, d, l, kp, eps_ratio);
  t.coh_per_antenna = dl_coherent(ctx, d, l, kp, t.beta, t.eps, eps_ratio);

  const double rho_dl = d.dl_power(l, kp);
  double sum = 0.0;
  for (int j = 0; j < ctx.cells(); ++j) sum += d.dl_total(j) / rho_dl * d.beta(j, l, kp);
  t.varsigma = sum - t.beta + ctx.noise_w / rho_dl;
  return t;
}

double sinr_ul(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               double eps_ratio) {
  return ul_terms(ctx, d, l, kp, eps_ratio).sinr(ctx.antennas());
}

double sinr_cl(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               int pilot_group, double eps_ratio) {
  return cl_terms(ctx, d, l, kp, pilot_group, eps_ratio).sinr(ctx.antennas());
}

double sinr_pd(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               double eps_ratio) {
  return pd_terms(ctx, d, l, kp, eps_ratio).sinr(ctx.antennas());
}

double sinr_ul_asymptote(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp) {
  const SinrTerms t = ul_terms(ctx, d, l, kp);
  if (t.coh_per_antenna <= 0.0) return std::numeric_limits<double>::infinity();
  return t.beta * t.beta * t.sectors / t.coh_per_antenna;
}

void SinrTermsMean::add(const SinrTerms& t) {
  sum.beta += t.beta;
  sum.eps += t.eps;
  sum.coh_per_antenna += t.coh_per_antenna;
  sum.varsigma += t.varsigma;
  sum.sectors = t.sectors;
  ++count;
}

SinrTerms SinrTermsMean::mean() const {
  if (count == 0) throw SimError("SinrTermsMean: no terms accumulated");
  SinrTerms m = sum;
  const double n = static_cast<double>(count);
  m.beta /= n;
  m.eps /= n;
  m.coh_per_antenna /= n;
  m.varsigma /= n;
  return m;
}

double antennas_for_target(const SinrTerms& t, double sinr_target) {
  if (sinr_target <= 0.0) throw SimError("antennas_for_target: target must be > 0");
  const double denom = t.beta * t.beta - sinr_target * t.coh_per_antenna / t.sectors;
  if (denom <= 0.0) {
    throw SimError("antennas_for_target: target at or above the large-array SINR ceiling");
  }
  const double bpe = t.beta + t.eps;
  return (sinr_target * bpe * t.varsigma - t.beta * bpe) / denom;
}

double antennas_lower_bound_for_target(const SinrTerms& t, double sinr_target) {
  if (sinr_target <= 0.0) {
    throw SimError("antennas_lower_bound_for_target: target must be > 0");
  }
  return (t.beta + t.eps) * (sinr_target * t.varsigma - t.beta) / (t.beta * t.beta);
}

double antennas_required(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp, double sinr_target, double eps_ratio) {
  return antennas_for_target(ul_terms(ctx, d, l, kp, eps_ratio), sinr_target);
}

double antennas_required_lower_bound(const scen::ScenarioContext& ctx, const scen::DropState& d,
                                     int l, int kp, double sinr_target, double eps_ratio) {
  return antennas_lower_bound_for_target(ul_terms(ctx, d, l, kp, eps_ratio), sinr_target);
}

double min_bs_coherence_symbols(int tau_bs, int dominant_count, int subcarriers,
                                double sinr_plain, double sinr_ic, bool data_as_pilot) {
  if (tau_bs < 1 || subcarriers < 1 || dominant_count < 0) {
    throw SimError("min_bs_coherence_symbols: bad sounding parameters");
  }
  if (sinr_ic <= sinr_plain) return std::numeric_limits<double>::infinity();
  const double ratio = std::log2(1.0 + sinr_plain) / std::log2(1.0 + sinr_ic);
  const double slots = dominant_count + (data_as_pilot ? 0 : 1);
  return static_cast<double>(tau_bs) * slots / (subcarriers * (1.0 - ratio));
}

int ls_bs_pilot_length(int m) {
  if (m < 1) throw SimError("ls_bs_pilot_length: array size must be >= 1");
  return m;
}

int cs_pilot_length(int sparsity, int m) {
  if (sparsity < 1 || m < 1) throw SimError("cs_pilot_length: bad parameters");
  const double len = sparsity * std::log2(2.0 * m / sparsity);
  return std::max(sparsity, static_cast<int>(std::ceil(len)));
}

double spectral_efficiency(const frame::FrameConfig& f, double sinr) {
  return f.pilot_resource_ratio() * std::log2(1.0 + sinr);
}

double spectral_efficiency_ic(const frame::FrameConfig& f, double sinr, int tau_bs,
                              int dominant_count, bool data_as_pilot) {
  return f.pilot_resource_ratio() * f.bs_resource_ratio(tau_bs, dominant_count, data_as_pilot) *
         std::log2(1.0 + sinr);
}

}  // namespace tsp::analytics
