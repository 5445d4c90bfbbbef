#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths: long-double erfc for normal tails, bisection for
// quantiles, closed forms for the Cauchy, naive summation for matrices.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline long double norm_sf(long double x) {
  return 0.5L * erfcl(x * 0.70710678118654752440L);
}

inline long double norm_pdf(long double x) {
  return expl(-0.5L * x * x) / sqrtl(2.0L * 3.14159265358979323846L);
}

// Inverse survival by plain bisection in long double.
inline long double norm_isf(long double p) {
  long double lo = -45.0L, hi = 45.0L;
  for (int i = 0; i < 200; ++i) {
    long double mid = 0.5L * (lo + hi);
    if (norm_sf(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

// Cauchy (Student with 1 dof) upper tail.
inline double cauchy_sf(double t) { return 0.5 - std::atan(t) / 3.14159265358979323846; }

// Minimal deterministic RNG for sampling oracles: splitmix64 + inverse-CDF
// normals, so oracle draws never share code with the library's generators.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
  // Box-Muller, deliberately a different transport than the library's
  // inverse-CDF sampler.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Two-sided Kolmogorov-Smirnov distance against Uniform[0,1].
inline double ks_distance(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double hi = (i + 1) / n - sample[i];
    const double lo = sample[i] - i / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace oracle
