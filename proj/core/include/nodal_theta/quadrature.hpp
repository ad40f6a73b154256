#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/errors.hpp"

namespace nodal_theta {

/// Adaptive Gauss-Kronrod (15/21) on [a, b] for a complex-valued integrand.
/// Throws QuadratureFailure when the error estimate stays above
/// max(tol, tol * |result|).
template <class F>
Complex integrate_interval(F&& f, double a, double b, double tol,
                           unsigned max_depth = 12) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  const Complex value = gauss_kronrod<double, 21>::integrate(
      [&](double x) -> Complex { return f(x); }, a, b, max_depth, 0.1 * tol, &err);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw QuadratureFailure("quadrature produced a non-finite value");
  }
  if (err > std::max(tol, tol * std::abs(value))) {
    std::ostringstream msg;
    msg << "quadrature error estimate " << err << " above tolerance " << tol;
    throw QuadratureFailure(msg.str());
  }
  return value;
}

/// Integral of f(z) dz along the straight segment from za to zb.
template <class F>
Complex integrate_segment(F&& f, Complex za, Complex zb, double tol) {
  const Complex dz = zb - za;
  return integrate_interval([&](double x) { return f(za + x * dz) * dz; }, 0.0,
                            1.0, tol);
}

/// Integral of f(z) dz along a polyline; the tolerance is split evenly.
template <class F>
Complex integrate_polyline(F&& f, std::span<const Complex> vertices, double tol) {
  Complex sum{};
  if (vertices.size() < 2) return sum;
  const double seg_tol = tol / static_cast<double>(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    sum += integrate_segment(f, vertices[i], vertices[i + 1], seg_tol);
  }
  return sum;
}

/// Integral of f(z) dz around the circle |z - center| = radius, counterclockwise.
template <class F>
Complex integrate_circle(F&& f, Complex center, double radius, double tol) {
  return integrate_interval(
      [&](double u) {
        const Complex r = radius * std::polar(1.0, kTwoPi * u);
        return f(center + r) * kTwoPiI * r;
      },
      0.0, 1.0, tol);
}

/// Fixed 8-point Gauss-Legendre mean of f over [0, 1].
template <class F>
Complex gauss_mean(F&& f) {
  using boost::math::quadrature::gauss;
  return gauss<double, 8>::integrate([&](double x) -> Complex { return f(x); },
                                     0.0, 1.0);
}

}  // namespace nodal_theta
