#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tsp/common.hpp"
#include "tsp/kernels.hpp"
#include "tsp/rng.hpp"

using tsp::cplx;
namespace kern = tsp::kern;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t link) {
  tsp::rng::Stream s(11, 0, tsp::rng::LinkClass::test, link);
  std::vector<cplx> v(n);
  for (auto& z : v) z = s.cgaussian();
  return v;
}

bool has_isa(const char* name) {
  try {
    kern::set_isa(name);
  } catch (const tsp::SimError&) {
    return false;
  }
  kern::set_isa(nullptr);
  return true;
}

}  // namespace

TEST_CASE("scalar kernels match a direct loop") {
  auto x = random_vec(257, 1);
  auto y = random_vec(257, 2);
  kern::set_isa("scalar");
  cplx dot = kern::cdotc(x.size(), x.data(), y.data());
  double n2 = kern::norm2(x.size(), x.data());
  cplx dot_ref = 0.0;
  double n2_ref = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot_ref += std::conj(x[i]) * y[i];
    n2_ref += std::norm(x[i]);
  }
  CHECK(std::abs(dot - dot_ref) <= 1e-12 * std::abs(dot_ref));
  CHECK(std::abs(n2 - n2_ref) <= 1e-12 * n2_ref);

  auto acc = y;
  cplx a{0.3, -1.7};
  kern::caxpy(x.size(), a, x.data(), acc.data());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(acc[i] - (y[i] + a * x[i])) <= 1e-14);
  }
  kern::set_isa(nullptr);
}

TEST_CASE("vector implementations agree with scalar at every length") {
  const char* simd = nullptr;
  if (has_isa("avx2")) simd = "avx2";
  if (has_isa("neon")) simd = "neon";
  if (simd == nullptr) {
    CHECK(std::string(kern::active_isa()) == "scalar");
    return;
  }

  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{7}, std::size_t{64}, std::size_t{1023}}) {
    auto x = random_vec(n, 100 + n);
    auto y = random_vec(n, 200 + n);
    cplx a{-0.8, 0.45};

    kern::set_isa("scalar");
    cplx dot_s = kern::cdotc(n, x.data(), y.data());
    double n2_s = kern::norm2(n, x.data());
    auto axpy_s = y;
    kern::caxpy(n, a, x.data(), axpy_s.data());

    kern::set_isa(simd);
    CHECK(std::string(kern::active_isa()) == simd);
    cplx dot_v = kern::cdotc(n, x.data(), y.data());
    double n2_v = kern::norm2(n, x.data());
    auto axpy_v = y;
    kern::caxpy(n, a, x.data(), axpy_v.data());

    double scale = std::max(1.0, std::abs(dot_s));
    CHECK(std::abs(dot_v - dot_s) <= 1e-12 * scale);
    CHECK(std::abs(n2_v - n2_s) <= 1e-12 * std::max(1.0, n2_s));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(axpy_v[i] - axpy_s[i]) <= 1e-12);
    }
  }
  kern::set_isa(nullptr);
}

TEST_CASE("unknown isa name is rejected") {
  CHECK_THROWS_AS(kern::set_isa("sse9"), tsp::SimError);
  kern::set_isa(nullptr);
  std::string active = kern::active_isa();
  CHECK((active == "scalar" || active == "avx2" || active == "neon"));
}
