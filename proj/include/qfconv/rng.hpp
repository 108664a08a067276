#pragma once

#include <cmath>
#include <cstdint>

namespace qfconv {

// Counter-based generator: the i-th output is a pure function of
// (seed, stream, i), so sampling can be split across workers by stream
// without changing any draw.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

  std::uint64_t next_u64() { return mix(key_ + (ctr_++) * kGamma); }

  // Uniform in (0, 1]; never returns 0 so logs are safe.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; two uniforms per draw, no cached state.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }
  double normal(double mean, double stddev) {
    return mean + stddev * normal();
  }

  CounterRng split(std::uint64_t worker) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(worker * kGamma + 0x6a09e667f3bcc909ull));
    r.ctr_ = 0;
    return r;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace qfconv
