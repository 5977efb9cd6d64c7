#pragma once

#include "tsp/frame.hpp"
#include "tsp/scenario.hpp"

namespace tsp::analytics {

// Channel-estimation mean-square error per antenna for one user, split by
// cause. With sectorization active the fields already carry the sector gain.
struct MsceeBreakdown {
  double pilot = 0.0;  // co-group cells reusing the same pilot sequence
  double data = 0.0;   // DL data of cells outside the pilot group
  double noise = 0.0;
  double total() const { return pilot + data + noise; }
};

// Same split after cancelling the clustered interferers' DL data.
struct IcMsceeBreakdown {
  double pilot = 0.0;
  double data_others = 0.0;    // DL data of cells beyond the cluster
  double data_residual = 0.0;  // leakage from imperfect BS-BS estimates
  double noise_residual = 0.0; // receiver noise folded through cancellation
  double noise = 0.0;
  double total() const { return pilot + data_others + data_residual + noise_residual + noise; }
};

// data_scale multiplies the interfering DL power seen during estimation
// (1 = nominal); the residual terms scale with it too.
MsceeBreakdown mscee_tsp(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp, double data_scale = 1.0);
IcMsceeBreakdown mscee_ic_tsp(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                              int kp, double data_scale = 1.0);

// Scalar MMSE refinement of an LS estimate with known channel gain.
double lmmse_shrink(double beta, double ls_mscee);

// MSCEE for one user honoring the configured MS estimator and cancellation
// setting.
double user_mscee(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                  double data_scale = 1.0);

// Closed-form SINR decomposition. numerator grows with the array size m, the
// coherent part is the pilot-sharing interference that grows with m as well,
// and varsigma collects everything uncorrelated with the estimate.
struct SinrTerms {
  double beta = 0.0;
  double eps = 0.0;
  double coh_per_antenna = 0.0;  // coherent interference per antenna
  double varsigma = 0.0;
  int sectors = 1;

  double numerator(double m) const { return (m + 1.0) * beta * beta + eps * beta; }
  double denominator(double m) const {
    return m * coh_per_antenna / sectors + (beta + eps) * varsigma;
  }
  double sinr(double m) const { return numerator(m) / denominator(m); }
};

// Field-wise average of per-user SINR terms. Sweep curves report the closed
// form evaluated at population-average parameters; averaging the per-user
// SINRs instead lets a handful of cell-center users dominate and the uplink
// and downlink stages drift tens of dB apart.
struct SinrTermsMean {
  SinrTerms sum;
  long count = 0;
  void add(const SinrTerms& t);
  SinrTerms mean() const;  // throws when nothing was added
};

// eps_ratio overrides every cell's estimation error as eps = ratio * beta of
// the estimated link (pass a negative value to use the configured estimator).
SinrTerms ul_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   double eps_ratio = -1.0);
// DL reception while cell group pilot_group is sounding (-1 = the group after
// the target's in index order; the target's own group degrades to the pure-DL
// case since its cells are silent during their own pilot).
SinrTerms cl_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   int pilot_group = -1, double eps_ratio = -1.0);
SinrTerms pd_terms(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
                   double eps_ratio = -1.0);

double sinr_ul(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               double eps_ratio = -1.0);
double sinr_cl(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               int pilot_group = -1, double eps_ratio = -1.0);
double sinr_pd(const scen::ScenarioContext& ctx, const scen::DropState& d, int l, int kp,
               double eps_ratio = -1.0);

// Large-array UL SINR ceiling set by pilot sharing alone.
double sinr_ul_asymptote(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp);

// Array size needed to hit a UL SINR target (linear). Throws when the target
// is at or above the large-array ceiling. The lower bound ignores coherent
// interference and never exceeds the exact requirement. The terms-level
// variants invert any SinrTerms, e.g. population averages; the per-user
// wrappers evaluate that user's own terms.
double antennas_for_target(const SinrTerms& t, double sinr_target);
double antennas_lower_bound_for_target(const SinrTerms& t, double sinr_target);
double antennas_required(const scen::ScenarioContext& ctx, const scen::DropState& d, int l,
                         int kp, double sinr_target, double eps_ratio = -1.0);
double antennas_required_lower_bound(const scen::ScenarioContext& ctx, const scen::DropState& d,
                                     int l, int kp, double sinr_target, double eps_ratio = -1.0);

// Shortest BS-BS coherence window (in symbols) for which cancellation pays
// off in net spectral efficiency; +infinity when sinr_ic <= sinr_plain.
double min_bs_coherence_symbols(int tau_bs, int dominant_count, int subcarriers,
                                double sinr_plain, double sinr_ic, bool data_as_pilot = false);

// Pilot lengths for the BS-BS sounding phase.
int ls_bs_pilot_length(int m);
int cs_pilot_length(int sparsity, int m);

// Net rates: the plain variant pays only the UL pilot overhead, the
// cancellation variant additionally pays the BS-BS sounding overhead.
double spectral_efficiency(const frame::FrameConfig& f, double sinr);
double spectral_efficiency_ic(const frame::FrameConfig& f, double sinr, int tau_bs,
                              int dominant_count, bool data_as_pilot = false);

}  // namespace tsp::analytics
