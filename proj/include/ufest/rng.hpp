// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ufest {

/// Seedable, splittable randomness source. Identical (seed, stream) pairs
/// reproduce identical draws; child streams are derived by mixing the
/// parent's stream id, so independent substreams never share state.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0)
      : seed_(seed), stream_(stream), eng_(mix(seed, stream)) {}

  RngStream split(uint64_t child) const {
    return RngStream(seed_, mix(stream_, child + 1));
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint64_t nextU64() { return eng_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (kept stdlib-free for bit stability).
  double gaussian() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    haveSpare_ = true;
    return r * std::cos(t);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static uint64_t mix(uint64_t a, uint64_t b) {
    // splitmix64 over the concatenated words
    uint64_t z = a + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    z += b + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  uint64_t stream_;
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool haveSpare_ = false;
};

}  // namespace ufest
