#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace carleman {

/// Quintic smoothstep: 0 for t<=0, 1 for t>=1, C^2 across both ends.
inline double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

/// C^2 radial bump, 1 at t=0, 0 for t>=1.
inline double bump5(double t) {
  return 1.0 - smoothstep5(t);
}

/// log(sum_k exp(x_k)) without overflow. Entries equal to -inf are skipped.
inline double log_sum_exp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

inline double sq(double x) { return x * x; }

/// Deterministic RNG used across the project; never seeded from the clock.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen_);
  }
  double normal() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(gen_);
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Fixed 17-significant-digit formatting used by every CSV writer so that
/// reruns are byte-identical.
std::string format_g17(double x);

class CarlemanError : public std::runtime_error {
 public:
  explicit CarlemanError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace carleman
