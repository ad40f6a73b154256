#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace nodal_theta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

/// A point of C^2 in the (z, w) coordinates of the period group.
struct CPair {
  Complex z{};
  Complex w{};

  CPair& operator+=(const CPair& o) {
    z += o.z;
    w += o.w;
    return *this;
  }
  CPair& operator-=(const CPair& o) {
    z -= o.z;
    w -= o.w;
    return *this;
  }
  friend CPair operator+(CPair a, const CPair& b) { return a += b; }
  friend CPair operator-(CPair a, const CPair& b) { return a -= b; }
  friend CPair operator*(double s, const CPair& a) { return {s * a.z, s * a.w}; }
  friend CPair operator*(const CPair& a, double s) { return s * a; }
  friend bool operator==(const CPair&, const CPair&) = default;

  double norm() const { return std::sqrt(std::norm(z) + std::norm(w)); }
};

}  // namespace nodal_theta
