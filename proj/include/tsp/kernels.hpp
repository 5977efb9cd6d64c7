// Hot-loop complex vector kernels with runtime ISA dispatch.
//
// Scalar reference implementations always exist; an AVX2 variant (x86) or a
// NEON variant (aarch64) is selected at startup when the CPU supports it.
// The TSP_KERNELS environment variable ("scalar", "avx2", "neon") overrides
// the automatic choice, which the tests use to check equivalence.
#pragma once

#include <cstddef>

#include "tsp/common.hpp"

namespace tsp::kern {

// sum_i conj(x[i]) * y[i]
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);
// y[i] += a * x[i]
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
// sum_i |x[i]|^2
double norm2(std::size_t n, const cplx* x);

// Name of the implementation currently dispatched ("scalar", "avx2", "neon").
const char* active_isa();
// Force an implementation by name; nullptr restores automatic selection.
// Throws SimError if the name is unknown or unavailable on this machine.
void set_isa(const char* name);

namespace detail {

struct Ops {
  cplx (*cdotc)(std::size_t, const cplx*, const cplx*);
  void (*caxpy)(std::size_t, cplx, const cplx*, cplx*);
  double (*norm2)(std::size_t, const cplx*);
  const char* name;
};

Ops scalar_ops();
#if defined(TSP_HAVE_AVX2_TU)
bool avx2_supported();
Ops avx2_ops();
#endif
#if defined(TSP_HAVE_NEON_TU)
Ops neon_ops();
#endif

}  // namespace detail

}  // namespace tsp::kern
