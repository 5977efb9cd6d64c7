// Runtime selection of the kernel implementation.
#include "tsp/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace tsp::kern {
namespace {

detail::Ops pick_auto() {
#if defined(TSP_HAVE_AVX2_TU)
  if (detail::avx2_supported()) return detail::avx2_ops();
#endif
#if defined(TSP_HAVE_NEON_TU)
  return detail::neon_ops();
#endif
  return detail::scalar_ops();
}

detail::Ops pick_named(const char* name) {
  if (std::strcmp(name, "scalar") == 0) return detail::scalar_ops();
#if defined(TSP_HAVE_AVX2_TU)
  if (std::strcmp(name, "avx2") == 0) {
    if (!detail::avx2_supported()) throw SimError("TSP_KERNELS=avx2 requested but the CPU lacks AVX2/FMA");
    return detail::avx2_ops();
  }
#endif
#if defined(TSP_HAVE_NEON_TU)
  if (std::strcmp(name, "neon") == 0) return detail::neon_ops();
#endif
  throw SimError(std::string("unknown or unavailable kernel ISA: ") + name);
}

detail::Ops initial_ops() {
  if (const char* env = std::getenv("TSP_KERNELS")) return pick_named(env);
  return pick_auto();
}

detail::Ops& ops() {
  static detail::Ops current = initial_ops();
  return current;
}

}  // namespace

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) { return ops().cdotc(n, x, y); }
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) { ops().caxpy(n, a, x, y); }
double norm2(std::size_t n, const cplx* x) { return ops().norm2(n, x); }

const char* active_isa() { return ops().name; }

void set_isa(const char* name) { ops() = name ? pick_named(name) : pick_auto(); }

}  // namespace tsp::kern
