// AVX2+FMA kernels. Two interleaved complex doubles per 256-bit vector;
// tails are handled by scalar remainder loops. This translation unit is the
// only one compiled with -mavx2 -mfma.
#include "tsp/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

namespace tsp::kern::detail {
namespace {

// Swap real/imag lanes within each complex: [r0 i0 r1 i1] -> [i0 r0 i1 r1].
inline __m256d swap_lanes(__m256d v) { return _mm256_permute_pd(v, 0x5); }

cplx cdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_rr = _mm256_setzero_pd();  // xr*yr and xi*yi products
  __m256d acc_ri = _mm256_setzero_pd();  // xr*yi (even) and xi*yr (odd)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xp + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yp + 2 * i);
    acc_rr = _mm256_fmadd_pd(vx, vy, acc_rr);
    acc_ri = _mm256_fmadd_pd(vx, swap_lanes(vy), acc_ri);
  }
  alignas(32) double rr[4], ri[4];
  _mm256_store_pd(rr, acc_rr);
  _mm256_store_pd(ri, acc_ri);
  double re = (rr[0] + rr[1]) + (rr[2] + rr[3]);
  double im = (ri[0] - ri[1]) + (ri[2] - ri[3]);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void caxpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xp + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yp + 2 * i);
    // (ar + j ai)(xr + j xi): even lanes ar*xr - ai*xi, odd lanes ar*xi + ai*xr.
    const __m256d cross = _mm256_mul_pd(ai, swap_lanes(vx));
    const __m256d prod = _mm256_fmaddsub_pd(ar, vx, cross);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(vy, prod));
  }
  const double arr = a.real(), aii = a.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{arr * xr - aii * xi, arr * xi + aii * xr};
  }
}

double norm2_avx2(std::size_t n, const cplx* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return out;
}

}  // namespace

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

Ops avx2_ops() { return {cdotc_avx2, caxpy_avx2, norm2_avx2, "avx2"}; }

}  // namespace tsp::kern::detail

#endif
