#include "nodal_theta/differentials.hpp"

#include <cmath>

#include "nodal_theta/errors.hpp"
#include "nodal_theta/quadrature.hpp"

namespace nodal_theta {

namespace {

constexpr Characteristic kOdd{0.5, 0.5};

// Near 0 the terms m and -m of theta11 are paired into
//   theta11(t) = -2 sum_k (-1)^k e(m^2 tau / 2) sin(2 pi m t),  m = k + 1/2,
// which keeps full relative accuracy as t -> 0.
constexpr double kPairedRadius = 0.25;

Complex odd_theta_paired(Complex t, const ModularParameter& tau,
                         const SeriesPolicy& policy, int order) {
  Complex sum{};
  for (int k = 0; k <= policy.max_index; ++k) {
    const double m = k + 0.5;
    const Complex weight = e_func(0.5 * m * m * tau.value());
    const Complex arg = kTwoPi * m * t;
    const Complex term =
        order == 0 ? weight * std::sin(arg) : weight * kTwoPi * m * std::cos(arg);
    sum += (k % 2 == 0 ? -2.0 : 2.0) * term;
    if (std::abs(term) < 0.25 * policy.abs_tol * std::abs(sum)) return sum;
  }
  throw NonConvergent("odd theta series near 0 did not converge");
}

}  // namespace

ThirdKindDifferential::ThirdKindDifferential(const NodalCurveSpec& spec)
    : tau_(spec.tau()),
      policy_(spec.policy()),
      p1_(spec.p1()),
      p2_(spec.p2()),
      periods_(derive_periods(spec)) {
  jet_.a1 = theta_char_derivative(kOdd, 0.0, tau_, policy_, 1);
  jet_.a3 = theta_char_derivative(kOdd, 0.0, tau_, policy_, 3) / 6.0;
  jet_.a5 = theta_char_derivative(kOdd, 0.0, tau_, policy_, 5) / 120.0;
}

Complex ThirdKindDifferential::theta11(Complex z) const {
  if (std::abs(z) < kPairedRadius) return odd_theta_paired(z, tau_, policy_, 0);
  return theta_char(kOdd, z, tau_, policy_);
}

Complex ThirdKindDifferential::theta11_dz(Complex z) const {
  if (std::abs(z) < kPairedRadius) return odd_theta_paired(z, tau_, policy_, 1);
  return theta_char_dz(kOdd, z, tau_, policy_);
}

Complex ThirdKindDifferential::ell_regular(Complex t) const {
  if (std::abs(t) < kLaurentSwitch) {
    const Complex u = jet_.a3 / jet_.a1;
    const Complex v = jet_.a5 / jet_.a1;
    const Complex t2 = t * t;
    return t * (2.0 * u + (4.0 * v - 2.0 * u * u) * t2);
  }
  return theta11_dz(t) / theta11(t) - 1.0 / t;
}

Complex ThirdKindDifferential::t_over_theta11(Complex t) const {
  if (std::abs(t) < kLaurentSwitch) {
    const Complex t2 = t * t;
    return 1.0 / (jet_.a1 * (1.0 + t2 * (jet_.a3 / jet_.a1 + t2 * (jet_.a5 / jet_.a1))));
  }
  return t / theta11(t);
}

Complex ThirdKindDifferential::ell(Complex z) const {
  // theta11(t + p + q tau) = f theta11(t) with dlog f / dz = -2 pi i q.
  const Complex tau = tau_.value();
  const double q = std::round(z.imag() / tau.imag());
  const double p = std::round(z.real() - q * tau.real());
  const Complex t = z - p - q * tau;
  if (std::abs(t) < 1e-12) throw PoleAt("eta evaluated at a pole");
  if (std::abs(t) < kLaurentSwitch) {
    return 1.0 / t + ell_regular(t) - kTwoPiI * q;
  }
  return theta11_dz(t) / theta11(t) - kTwoPiI * q;
}

Complex ThirdKindDifferential::eta_coeff(Complex z) const {
  return (ell(z - p1_) - ell(z - p2_)) / kTwoPiI + periods_.kappa_coeff;
}

Complex ThirdKindDifferential::h_at_p1(Complex t) const {
  return (ell_regular(t) - ell(p1_ - p2_ + t)) / kTwoPiI + periods_.kappa_coeff;
}

Complex ThirdKindDifferential::h1_at_p2(Complex t) const {
  return (ell(p2_ - p1_ + t) - ell_regular(t)) / kTwoPiI + periods_.kappa_coeff;
}

Complex period_integral(const NodalCurveSpec& spec, Contour contour,
                        double quad_tol) {
  const ThirdKindDifferential eta(spec);
  const auto f = [&](Complex z) { return eta.eta_coeff(z); };
  const Complex q0 = spec.q0();
  switch (contour) {
    case Contour::alpha:
      return integrate_segment(f, q0, q0 + 1.0, quad_tol);
    case Contour::beta:
      return integrate_segment(f, q0, q0 + spec.tau().value(), quad_tol);
    case Contour::gamma1:
      return integrate_circle(f, spec.p1(), 0.5 * spec.delta(), quad_tol);
    case Contour::gamma2:
      return integrate_circle(f, spec.p2(), 0.5 * spec.eps(), quad_tol);
  }
  throw std::invalid_argument("unknown contour");
}

}  // namespace nodal_theta
