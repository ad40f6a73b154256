#pragma once

#include <cstdint>

#include "nodal_theta/complex_pair.hpp"

namespace nodal_theta {

/// SplitMix64. split(i) derives an independent stream for sample i, so results
/// do not depend on evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 child(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

/// Shift c with c1 = s + t tau (s, t in [0, 1)), Re c2 in [0, 1) and
/// Im c2 in [-1/4, 1/4].
inline CPair sample_shift(SplitMix64& rng, Complex tau) {
  const double s = rng.uniform();
  const double t = rng.uniform();
  const double x = rng.uniform();
  const double y = rng.uniform(-0.25, 0.25);
  return {s + t * tau, Complex(x, y)};
}

}  // namespace nodal_theta
