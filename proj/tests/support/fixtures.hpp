#pragma once

#include <cmath>
#include <complex>

#include "nodal_theta/curve.hpp"

namespace nodal_theta::testing {

/// Square lattice instance; p1 - p2 = 0.31 + 0.17i.
inline NodalCurveSpec config1(double eps = 0.05) {
  NodalCurveSpec::Params p;
  p.tau = {0.0, 1.0};
  p.p1 = {0.55, 0.62};
  p.p2 = {0.24, 0.45};
  p.z0 = {0.8, 0.15};
  p.q0 = {0.0, 0.0};
  p.delta = 0.05;
  p.eps = eps;
  return NodalCurveSpec::create(p);
}

/// Oblique lattice instance.
inline NodalCurveSpec config2(double eps = 0.05) {
  NodalCurveSpec::Params p;
  p.tau = {0.3, 0.8};
  p.p1 = {0.88, 0.48};
  p.p2 = {0.47, 0.32};
  p.z0 = {0.895, 0.12};
  p.q0 = {0.0, 0.0};
  p.delta = 0.05;
  p.eps = eps;
  return NodalCurveSpec::create(p);
}

/// Theta series with characteristic summed term by term with std::exp,
/// |n| <= 40. Independent of the library's windowing and e_func.
inline Complex naive_theta(double a, double b, Complex z, Complex tau, int order = 0) {
  const Complex two_pi_i{0.0, 2.0 * M_PI};
  Complex sum{};
  for (int n = -40; n <= 40; ++n) {
    const double m = n + a;
    Complex term = std::exp(two_pi_i * (0.5 * m * m * tau + m * (z + b)));
    for (int k = 0; k < order; ++k) term *= two_pi_i * m;
    sum += term;
  }
  return sum;
}

inline double dist_to_integer(Complex x) {
  return std::abs(x - std::round(x.real()));
}

}  // namespace nodal_theta::testing
