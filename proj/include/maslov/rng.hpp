#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace maslov {

// Splittable PRNG built on the splitmix64 mixing function. Distributions
// are implemented directly so that sequences are identical across standard
// library implementations; split() derives independent substreams whose
// output does not depend on how much the parent has been consumed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  SplitRng split(std::uint64_t stream) const {
    return SplitRng(
        mix(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL))));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_normal() {
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::complex<double> next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return {re, im};
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace maslov
