// Counter-based random number generation (Philox4x32-10).
//
// Every random draw in the simulator comes from a stream keyed by
// (seed, drop index, link class, link id). Streams are stateless apart from
// a block counter, so any single link's draws can be reproduced in isolation
// and parallel drop execution cannot perturb the sequences.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "tsp/common.hpp"

namespace tsp::rng {

// What a stream is used for. Part of the key, so the same link id can be
// reused across classes without collisions.
enum class LinkClass : std::uint32_t {
  user_position = 1,
  shadow_ms_bs = 2,
  shadow_bs_bs = 3,
  shadow_ms_ms = 4,
  small_scale_ms_bs = 5,
  small_scale_bs_bs = 6,
  small_scale_ms_ms = 7,
  data_symbols = 8,
  noise = 9,
  pilot_matrix = 10,
  surrogate_estimate = 11,
  test = 12,
};

struct Philox4x32 {
  // One 10-round block. Counter and key layouts follow the reference
  // formulation: x[0] and x[2] are multiplied, results crossed over.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> x,
                                            std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return x;
  }
};

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint32_t drop, LinkClass cls, std::uint64_t link)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {
    // 26 bits of high link id plus 6 bits of class; link ids stay far below
    // 2^58 in practice (they pack cell/user indices).
    fixed_[0] = static_cast<std::uint32_t>(link);
    fixed_[1] = (static_cast<std::uint32_t>(link >> 32) & 0x03FFFFFFu) |
                (static_cast<std::uint32_t>(cls) << 26);
    fixed_[2] = drop;
  }

  std::uint32_t next_u32() {
    if (buf_pos_ == 4) {
      buf_ = Philox4x32::block({counter_++, fixed_[0], fixed_[1], fixed_[2]}, key_);
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  // Uniform on (0,1), 53-bit resolution, never exactly 0 or 1.
  double uniform01() {
    const std::uint64_t a = next_u32();
    const std::uint64_t b = next_u32();
    const std::uint64_t bits = ((a << 32) | b) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the paired draw is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Circularly-symmetric complex Gaussian with unit variance
  // (real and imaginary parts N(0, 1/2)).
  cplx cgaussian() {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    const double re = gaussian();
    const double im = gaussian();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 3> fixed_{};
  std::uint32_t counter_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tsp::rng
