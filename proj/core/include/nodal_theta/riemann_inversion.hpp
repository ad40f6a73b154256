#pragma once

#include <array>
#include <optional>
#include <span>

#include "nodal_theta/abel_jacobi.hpp"
#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/curve.hpp"

namespace nodal_theta {

/// Relative threshold of the genericity guards.
inline constexpr double kGenericityTol = 1e-3;

/// max |theta[0;0]| on a coarse grid of the fundamental parallelogram.
double theta_scale(const NodalCurveSpec& spec);

/// T_c(z) = Theta(phi1(z) - c1, phi2(z) - c2). Since Theta depends on w only
/// through e(w), T_c is evaluated from e(phi2) and is meromorphic on C with a
/// simple pole at p2 (mod Lambda).
class ThetaPullback {
 public:
  /// Throws NonGeneric when |theta00(phi1(p1) - c1)| <= kGenericityTol * scale
  /// and check_generic is set.
  ThetaPullback(const AbelJacobi& aj, CPair c, bool check_generic = true);

  const AbelJacobi& abel_jacobi() const { return aj_; }
  const NodalCurveSpec& spec() const { return aj_.spec(); }
  CPair c() const { return c_; }

  /// Argument of the theta factors at z: phi1(z) - c1.
  Complex shifted(Complex z) const { return z - spec().z0() - c_.z; }
  Complex theta00(Complex u) const;
  Complex theta00_dz(Complex u) const;
  Complex theta_r(Complex u) const;
  Complex theta_r_dz(Complex u) const;

  Complex value(Complex z) const;
  Complex derivative(Complex z) const;
  Complex log_derivative(Complex z) const { return derivative(z) / value(z); }
  /// Same value through the continued phi2 of a path.
  Complex value_on_path(const BranchedPath& path) const;

 private:
  AbelJacobi aj_;
  CPair c_;
  Complex e_minus_c2_;
};

/// (1/2 pi i) of the integral of dlog T_c around a closed polygon.
Complex winding_integral(const ThetaPullback& tp, std::span<const Complex> polygon,
                         double quad_tol);
/// Rounded winding number; ContourThroughZero when more than 0.1 off.
long winding_number(const ThetaPullback& tp, std::span<const Complex> polygon,
                    double quad_tol);

/// Zeros of T_c in the parallelogram: winding around its boundary plus the
/// pole at p2.
long count_zeros(const ThetaPullback& tp, double quad_tol);

/// (1/2 pi i) of the integral of dlog T_c along alpha (q0 -> q0 + 1).
Complex log_integral_alpha(const ThetaPullback& tp, double quad_tol);
/// (1/2 pi i) of the integral of dlog T_c along beta (q0 -> q0 + tau).
Complex log_integral_beta(const ThetaPullback& tp, double quad_tol);

/// The two zeros of T_c, isolated by subdivision and polished by Newton.
/// ZeroCollision when they cannot be separated, NonGeneric when one lies in a
/// closed excluded disk.
std::array<Complex, 2> locate_zeros(const ThetaPullback& tp, double quad_tol);

/// g(t) = t e(phi2(p2 + t)) via t0 e(phi2(p2 + t0) + int_{t0}^{t} h1) with t0 = eps.
Complex g_func(const AbelJacobi& aj, Complex t, double quad_tol);

struct MobiusCoeffs {
  Complex A, B, C, D;
};

/// Local data of T_c at p2 in the chart t = z - p2.
class LaurentData {
 public:
  /// Throws DegenerateC when |theta[-r1;r2](phi1(p2) - c1)| is below
  /// kGenericityTol * theta_scale.
  explicit LaurentData(const ThetaPullback& tp);

  const ThetaPullback& pullback() const { return tp_; }

  /// t e(phi2(p2 + t)) in closed form; its log-derivative is 2 pi i h1.
  Complex g(Complex t) const;
  Complex g_dt(Complex t) const;

  /// theta[-r1;r2](phi1(p2) - c1) g(0), so that c_{-1} = beta e(-c2).
  Complex beta() const { return beta_; }
  Complex c_minus1() const;

  MobiusCoeffs mobius(Complex t) const;
  Complex alpha1(Complex t) const;
  Complex alpha2(Complex t) const;
  /// T_c(p2 + t) = c_{-1}/t + h2(t).
  Complex h2(Complex t) const;
  /// T_c'/T_c (p2 + t) + 1/t, from the Mobius form.
  Complex h3(Complex t) const;
  Complex dh3_dc2(Complex t) const;
  /// theta00(phi1(p2) - c1) e(c2) / (theta[-r1;r2](phi1(p2) - c1) g(0)).
  Complex h3_at_zero_closed_form() const;
  /// lim_{t->0} of T_c'/T_c + 1/t evaluated from T_c itself.
  Complex h3_at_zero_limit() const;

  Complex H3(Complex t, double quad_tol) const;
  Complex dH3_dc2(Complex t, double quad_tol) const;
  /// Continued Log of t T_c(p2 + t) / c_{-1} from t = 0.
  Complex H3_closed_form(Complex t) const;

  /// Zeros of T_c in the disk |t| < radius (winding of C + D e(-c2)).
  long zeros_in_disk(double radius) const;

 private:
  ThetaPullback tp_;
  Complex u0_;
  Complex e_minus_c2_;
  Complex g0_;
  Complex beta_;
};

/// a(eps) = int_0^1 phi2(p2 + eps e(u)) du, branch continued from the
/// default-path value at p2 + eps.
Complex a_eps(const AbelJacobi& aj, double quad_tol);

/// Multiple v of tau in -v tau - phi1(Q0): v = 1/2 or v = 1.
enum class KappaVariant { half_tau, full_tau };

const char* to_string(KappaVariant v);

struct RiemannConstants {
  Complex kappa1;
  Complex kappa2;
  double eps = 0.0;
  Complex a_eps;
  Complex alpha_phi1;
  Complex alpha_phi2;
  KappaVariant variant = KappaVariant::half_tau;

  CPair value() const { return {kappa1, kappa2}; }
};

RiemannConstants riemann_constants(const AbelJacobi& aj, KappaVariant variant,
                                   double quad_tol);

/// d(eps)(c) = (c1, c1 r1 + H3(eps; c) / 2 pi i), eps taken from the spec.
CPair d_map(const AbelJacobi& aj, CPair c, double quad_tol);

/// (1/2 pi i) Log(theta00(phi1(p1) - c1) / T_c(p2 + eps)).
Complex slit_term(const ThetaPullback& tp);

struct Thm51Variant {
  KappaVariant variant = KappaVariant::half_tau;
  CPair kappa;
  GammaDecomposition decomposition;
  double residual = 0.0;
  /// Same with the slit term removed from the second component.
  GammaDecomposition slit_decomposition;
  double slit_residual = 0.0;
};

struct Thm51Result {
  CPair c;
  long zero_count = 0;
  std::array<Complex, 2> zeros{};
  CPair W;
  CPair d;
  Complex slit;
  std::array<Thm51Variant, 2> variants{};
  std::optional<KappaVariant> closing;
  std::optional<KappaVariant> slit_closing;
};

/// Residual of W - d(eps)(c) - kappa(eps) mod Gamma for both variants.
/// kappas must hold the half_tau and full_tau constants for aj's eps.
Thm51Result verify_thm51(const AbelJacobi& aj, CPair c,
                         const std::array<RiemannConstants, 2>& kappas,
                         double quad_tol, double residual_tol = 1e-6);

Thm51Result verify_thm51(const AbelJacobi& aj, CPair c, double quad_tol,
                         double residual_tol = 1e-6);

}  // namespace nodal_theta
