#pragma once

#include <cstdint>
#include <string>

#include "ufpp/core.hpp"

namespace ufpp {

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; out = x * 0x2545F4914F6CDD1D.
// A zero seed is replaced by 0x9E3779B97F4A7C15 (the all-zero state is fixed).
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [lo, hi] by reduction modulo the range size.
  i64 uniform(i64 lo, i64 hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<i64>(next() % span);
  }

 private:
  std::uint64_t state_;
};

struct RandomParams {
  int n = 10;
  i64 m = 10;
  i64 maxcap = 16;
  i64 maxdemand = 8;
  std::string profit_style = "uniform";  // uniform or proportional
};

/// Draw order: m capacities in [1, maxcap]; then per task s in [0, m-1],
/// t in [s+1, m], d in [1, maxdemand] redrawn up to 16 times while d > b and
/// then clamped to b, and w in [1, 100] (uniform) or d (t - s) (proportional).
Instance gen_random(const RandomParams& params, std::uint64_t seed);

}  // namespace ufpp
