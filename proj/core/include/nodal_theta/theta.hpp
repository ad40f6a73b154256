#pragma once

#include <complex>

#include "nodal_theta/complex_pair.hpp"

namespace nodal_theta {

/// tau with Im(tau) > 0; construction rejects anything else.
class ModularParameter {
 public:
  explicit ModularParameter(Complex tau);
  Complex value() const { return tau_; }

 private:
  Complex tau_;
};

/// Real characteristic [a; b] of a theta series.
struct Characteristic {
  double a = 0.0;
  double b = 0.0;
};

/// Truncation control for all theta series. The omitted tail is bounded by
/// abs_tol times the modulus of the dominant term.
struct SeriesPolicy {
  double abs_tol = 1e-14;
  int max_index = 64;

  /// Throws std::invalid_argument unless 0 < abs_tol < 1 and max_index >= 1.
  void validate() const;
};

enum class LatticeGenerator { one, tau };

/// e(x) = exp(2 pi i x). The real part of x is reduced mod 1 before use.
Complex e_func(Complex x);

/// Sum over n of e(1/2 (n+a)^2 tau + (n+a)(z+b)), differentiated `order`
/// times in z. The summation window is centred on the dominant term.
Complex theta_char_derivative(const Characteristic& ch, Complex z,
                              const ModularParameter& tau,
                              const SeriesPolicy& policy, int order);

inline Complex theta_char(const Characteristic& ch, Complex z,
                          const ModularParameter& tau,
                          const SeriesPolicy& policy = {}) {
  return theta_char_derivative(ch, z, tau, policy, 0);
}

inline Complex theta_char_dz(const Characteristic& ch, Complex z,
                             const ModularParameter& tau,
                             const SeriesPolicy& policy = {}) {
  return theta_char_derivative(ch, z, tau, policy, 1);
}

/// Factor f with theta[a;b](z + p + q tau) = f * theta[a;b](z).
Complex translation_factor(const Characteristic& ch, long p, long q, Complex z,
                           const ModularParameter& tau);

/// Theta factor rho0 on the generators of Lambda.
Complex rho0_factor(LatticeGenerator gen, Complex z, const ModularParameter& tau);

/// Unitary character psi(p + q tau) = e(p r1 + q r2).
Complex psi(long p, long q, double r1, double r2);

/// Generalized theta function theta[0;0](z) + theta[-r1;r2](z) e(w).
Complex big_theta(Complex z, Complex w, const ModularParameter& tau, double r1,
                  double r2, const SeriesPolicy& policy = {});

/// Partial derivative of big_theta in z.
Complex big_theta_dz(Complex z, Complex w, const ModularParameter& tau,
                     double r1, double r2, const SeriesPolicy& policy = {});

}  // namespace nodal_theta
