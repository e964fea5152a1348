#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace chronofit {

// Deterministic random draws for simulations and the quantile-table
// generator. std::mt19937's bit stream is fixed by the C++ standard; the
// distributions below are implemented here (rather than taken from
// <random>, whose normal_distribution algorithm is implementation-defined)
// so that seeded runs produce identical numbers on any conforming compiler.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    const std::uint64_t hi = engine_() >> 5;  // 27 bits
    const std::uint64_t lo = engine_() >> 6;  // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
  }

  // Standard normal via Box-Muller (both variates used, in order).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Exponential with the given mean.
  double exponential(double mean) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return -mean * std::log(u);
  }

  std::uint32_t next_u32() { return engine_(); }

 private:
  std::mt19937 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace chronofit
