#pragma once

#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/curve.hpp"
#include "nodal_theta/theta.hpp"

namespace nodal_theta {

/// Below this |t| the regular part of theta11'/theta11 is taken from its
/// Laurent series instead of the quotient.
inline constexpr double kLaurentSwitch = 1e-4;

/// Taylor data of theta[1/2;1/2] at 0: theta11(t) = a1 t + a3 t^3 + a5 t^5 + ...
struct OddThetaJet {
  Complex a1, a3, a5;
};

/// eta = (1/2 pi i) dlog(theta11(z - p1) / theta11(z - p2)) + kappa dz.
///
/// Local charts are translations: t = z - p1 near p1 and t = z - p2 near p2.
class ThirdKindDifferential {
 public:
  explicit ThirdKindDifferential(const NodalCurveSpec& spec);

  Complex p1() const { return p1_; }
  Complex p2() const { return p2_; }
  double kappa_coeff() const { return periods_.kappa_coeff; }
  const Periods& periods() const { return periods_; }
  const OddThetaJet& jet() const { return jet_; }
  const ModularParameter& tau() const { return tau_; }
  const SeriesPolicy& policy() const { return policy_; }

  Complex theta11(Complex z) const;
  Complex theta11_dz(Complex z) const;

  /// theta11'/theta11 at z; PoleAt within 1e-12 of a lattice point.
  Complex ell(Complex z) const;
  /// ell(t) - 1/t for small t, continuous through t = 0.
  Complex ell_regular(Complex t) const;
  /// t / theta11(t), continuous through t = 0.
  Complex t_over_theta11(Complex t) const;

  /// Coefficient of eta against dz.
  Complex eta_coeff(Complex z) const;
  /// eta_coeff(p1 + t) - 1/(2 pi i t).
  Complex h_at_p1(Complex t) const;
  /// eta_coeff(p2 + t) + 1/(2 pi i t).
  Complex h1_at_p2(Complex t) const;

 private:
  ModularParameter tau_;
  SeriesPolicy policy_;
  Complex p1_, p2_;
  Periods periods_;
  OddThetaJet jet_;
};

enum class Contour { alpha, beta, gamma1, gamma2 };

/// Period of eta over alpha (q0 -> q0 + 1), beta (q0 -> q0 + tau), or the
/// counterclockwise circles of radius delta/2 around p1 and eps/2 around p2.
Complex period_integral(const NodalCurveSpec& spec, Contour contour,
                        double quad_tol);

}  // namespace nodal_theta
