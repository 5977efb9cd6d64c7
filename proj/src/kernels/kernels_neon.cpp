// NEON kernels for aarch64 (NEON is baseline there, no runtime probe).
// One complex double per 128-bit vector; tails fall back to scalar code.
#include "tsp/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace tsp::kern::detail {
namespace {

cplx cdotc_neon(std::size_t n, const cplx* x, const cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  float64x2_t acc_rr = vdupq_n_f64(0.0);
  float64x2_t acc_ri = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xp + 2 * i);
    const float64x2_t vy = vld1q_f64(yp + 2 * i);
    acc_rr = vfmaq_f64(acc_rr, vx, vy);                 // xr*yr, xi*yi
    acc_ri = vfmaq_f64(acc_ri, vx, vextq_f64(vy, vy, 1));  // xr*yi, xi*yr
  }
  const double re = vgetq_lane_f64(acc_rr, 0) + vgetq_lane_f64(acc_rr, 1);
  const double im = vgetq_lane_f64(acc_ri, 0) - vgetq_lane_f64(acc_ri, 1);
  return {re, im};
}

void caxpy_neon(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

double norm2_neon(std::size_t n, const cplx* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xp + 2 * i);
    acc = vfmaq_f64(acc, vx, vx);
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

}  // namespace

Ops neon_ops() { return {cdotc_neon, caxpy_neon, norm2_neon, "neon"}; }

}  // namespace tsp::kern::detail

#endif
