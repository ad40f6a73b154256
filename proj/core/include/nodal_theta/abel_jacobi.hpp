#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nodal_theta/branch.hpp"
#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/curve.hpp"
#include "nodal_theta/differentials.hpp"

namespace nodal_theta {

/// Polyline starting at the base point. branch_state caches phi2 at the last
/// vertex once the path has been traced.
struct BranchedPath {
  std::vector<Complex> vertices;
  std::optional<Complex> branch_state;

  Complex end() const { return vertices.back(); }
};

using AbelJacobiValue = CPair;

/// phi2 continued along a parametrized curve x in [0, 1] from a known value.
class Phi2Track {
 public:
  Phi2Track(std::function<Complex(double)> curve,
            std::function<Complex(Complex)> quotient, double kappa,
            Complex phi2_start);

  Complex operator()(double x) const;
  Complex at_end() const { return (*this)(1.0); }

 private:
  std::function<Complex(double)> curve_;
  ContinuousLog log_;
  double kappa_;
  Complex z_start_;
  Complex phi2_start_;
};

/// Period map phi = (phi1, phi2) on the cut parallelogram. phi2 is the
/// continued value of (1/2 pi i) log Q(z) + kappa (z - z0), normalized to 0 at
/// z0, with Q(z) = theta11(z - p1) / theta11(z - p2).
class AbelJacobi {
 public:
  explicit AbelJacobi(const NodalCurveSpec& spec);

  const NodalCurveSpec& spec() const { return spec_; }
  const ThirdKindDifferential& eta() const { return eta_; }
  double r1() const { return eta_.periods().r1; }
  double r2() const { return eta_.periods().r2; }
  PeriodGroup period_group() const { return {r1(), r2(), spec_.tau().value()}; }
  /// Paths keep this distance from p1 and p2, except on a final radial leg.
  double forbidden_radius() const;

  Complex theta_quotient(Complex z) const;
  /// e(phi2(z)); single-valued, so no path is needed.
  Complex e_phi2(Complex z) const;

  Complex phi1(Complex P) const { return P - spec_.z0(); }
  Complex phi2(const BranchedPath& path) const;
  Complex phi2(Complex P) const { return phi2(default_path(P)); }
  /// phi2 by quadrature of eta along the path (independent check).
  Complex phi2_quadrature(const BranchedPath& path, double quad_tol) const;
  AbelJacobiValue phi(const BranchedPath& path) const;
  AbelJacobiValue phi(Complex P) const { return phi(default_path(P)); }

  /// Fills path.branch_state.
  void continue_phi2(BranchedPath& path) const;

  /// Straight segment from z0 when it keeps clear of p1 and p2; otherwise a
  /// detour through fixed interior points. Stays in the closed parallelogram.
  BranchedPath default_path(Complex P) const;
  /// Throws PoleProximity when the path violates the distance rule.
  void check_path(const BranchedPath& path) const;

  Phi2Track track(std::function<Complex(double)> curve, Complex phi2_start) const;

  CPair divisor_image(std::span<const BranchedPath> points) const;
  CPair divisor_image(std::span<const Complex> points) const;

 private:
  bool segment_clear(Complex a, Complex b, double radius) const;

  NodalCurveSpec spec_;
  ThirdKindDifferential eta_;
  Complex quotient_z0_;
};

}  // namespace nodal_theta
