#include "nodal_theta/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nodal_theta/errors.hpp"

namespace nodal_theta {

ModularParameter::ModularParameter(Complex tau) : tau_(tau) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real())) {
    throw std::invalid_argument("modular parameter needs Im(tau) > 0");
  }
}

void SeriesPolicy::validate() const {
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) {
    throw std::invalid_argument("SeriesPolicy: abs_tol must lie in (0, 1)");
  }
  if (max_index < 1) {
    throw std::invalid_argument("SeriesPolicy: max_index must be >= 1");
  }
}

Complex e_func(Complex x) {
  const double turns = x.real() - std::floor(x.real());
  const double modulus = std::exp(-kTwoPi * x.imag());
  return std::polar(modulus, kTwoPi * turns);
}

namespace {

// Bound on the ratio of the largest omitted term to the dominant one when the
// window is |n - center| <= n_terms.
double tail_ratio(double im_tau, double m_star, int n_terms, int order) {
  const double d = n_terms - 0.5;
  double ratio = std::exp(-kPi * im_tau * d * d);
  if (order > 0) {
    ratio *= std::pow(1.0 + kTwoPi * (std::abs(m_star) + n_terms + 1.0), order);
  }
  return ratio;
}

}  // namespace

Complex theta_char_derivative(const Characteristic& ch, Complex z,
                              const ModularParameter& tau,
                              const SeriesPolicy& policy, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  const Complex t = tau.value();
  const double im_tau = t.imag();

  // |term(m)| = exp(-pi Im(tau) m^2 - 2 pi m Im(z)) peaks at m* = -Im z / Im tau.
  const double m_star = -z.imag() / im_tau;
  const double center = std::round(m_star - ch.a);

  int n_terms = 1;
  while (tail_ratio(im_tau, m_star, n_terms, order) >= 0.25 * policy.abs_tol) {
    if (++n_terms > policy.max_index) {
      throw NonConvergent("theta series: index bound " +
                          std::to_string(policy.max_index) +
                          " reached before the tail bound was met");
    }
  }

  // Outermost terms first.
  Complex sum{0.0, 0.0};
  for (int k = n_terms; k >= 0; --k) {
    for (int sign : {1, -1}) {
      if (k == 0 && sign < 0) continue;
      const double m = center + sign * k + ch.a;
      Complex term = e_func(0.5 * m * m * t + m * (z + ch.b));
      if (order > 0) {
        const Complex factor{0.0, kTwoPi * m};
        for (int i = 0; i < order; ++i) term *= factor;
      }
      sum += term;
    }
  }
  return sum;
}

Complex translation_factor(const Characteristic& ch, long p, long q, Complex z,
                           const ModularParameter& tau) {
  const double qd = static_cast<double>(q);
  return e_func(-0.5 * qd * qd * tau.value() - qd * (z + ch.b) +
                ch.a * static_cast<double>(p));
}

Complex rho0_factor(LatticeGenerator gen, Complex z, const ModularParameter& tau) {
  if (gen == LatticeGenerator::one) return {1.0, 0.0};
  return e_func(-0.5 * tau.value() - z);
}

Complex psi(long p, long q, double r1, double r2) {
  return e_func(Complex(static_cast<double>(p) * r1 + static_cast<double>(q) * r2, 0.0));
}

Complex big_theta(Complex z, Complex w, const ModularParameter& tau, double r1,
                  double r2, const SeriesPolicy& policy) {
  return theta_char({0.0, 0.0}, z, tau, policy) +
         theta_char({-r1, r2}, z, tau, policy) * e_func(w);
}

Complex big_theta_dz(Complex z, Complex w, const ModularParameter& tau,
                     double r1, double r2, const SeriesPolicy& policy) {
  return theta_char_dz({0.0, 0.0}, z, tau, policy) +
         theta_char_dz({-r1, r2}, z, tau, policy) * e_func(w);
}

}  // namespace nodal_theta
