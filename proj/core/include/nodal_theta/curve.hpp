#pragma once

#include <array>
#include <complex>

#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/theta.hpp"

namespace nodal_theta {

/// Coordinates (s, t) of z = q0 + s + t tau relative to the cut corner q0.
struct ParallelogramCoords {
  double s = 0.0;
  double t = 0.0;
};

/// Problem instance: the elliptic curve C/(Z + tau Z), the two points p1, p2
/// that are glued into the node, base point z0, cut corner q0 and the radii of
/// the excluded disks U1 (around p1) and U2 (around p2).
///
/// p1, p2 and z0 are stored reduced into {q0 + s + t tau : 0 <= s, t < 1}.
class NodalCurveSpec {
 public:
  struct Params {
    Complex tau{0.0, 1.0};
    Complex p1{};
    Complex p2{};
    Complex z0{};
    Complex q0{};
    double delta = 0.05;
    double eps = 0.05;
    SeriesPolicy policy{};
    double quad_tol = 1e-10;
  };

  /// Validates and canonicalizes; throws std::invalid_argument on a bad instance.
  static NodalCurveSpec create(const Params& params);

  const ModularParameter& tau() const { return tau_; }
  Complex p1() const { return p1_; }
  Complex p2() const { return p2_; }
  Complex z0() const { return z0_; }
  Complex q0() const { return q0_; }
  double delta() const { return delta_; }
  double eps() const { return eps_; }
  const SeriesPolicy& policy() const { return policy_; }
  double quad_tol() const { return quad_tol_; }

  /// Same instance with a different U2 radius (validated again).
  NodalCurveSpec with_eps(double eps) const;

  ParallelogramCoords coords(Complex z) const;
  Complex point(double s, double t) const;
  Complex point(ParallelogramCoords st) const { return point(st.s, st.t); }
  /// Translate z by a lattice vector into the half-open parallelogram.
  Complex reduce(Complex z) const;
  bool in_closed_parallelogram(Complex z, double slack = 1e-12) const;
  /// Euclidean distance from z to the boundary lines of the parallelogram.
  double distance_to_boundary(Complex z) const;
  /// Distance from a to the nearest point of b + Lambda.
  double lattice_distance(Complex a, Complex b) const;
  Params params() const;

 private:
  NodalCurveSpec(const Params& p);

  ModularParameter tau_;
  Complex p1_, p2_, z0_, q0_;
  double delta_, eps_;
  SeriesPolicy policy_;
  double quad_tol_;
};

/// r1, r2: real alpha- and beta-periods of the normalized third-kind
/// differential; kappa_coeff is the multiple of dz added to make them real.
struct Periods {
  double r1 = 0.0;
  double r2 = 0.0;
  double kappa_coeff = 0.0;
};

Periods derive_periods(const NodalCurveSpec& spec);

/// Rank-3 discrete subgroup of C^2 generated by (0,1), (1,r1), (tau,r2).
struct PeriodGroup {
  double r1 = 0.0;
  double r2 = 0.0;
  Complex tau{0.0, 1.0};

  std::array<CPair, 3> generators() const {
    return {CPair{0.0, 1.0}, CPair{1.0, r1}, CPair{tau, r2}};
  }
  CPair combination(long m, long p, long q) const;
};

PeriodGroup period_group(const NodalCurveSpec& spec);

/// v = m (0,1) + p (1,r1) + q (tau,r2) + residual with integers obtained by
/// rounding. max_rounding_offset is the largest distance of a pre-rounding
/// coefficient from its integer; near 0.5 means the rounding was ambiguous.
struct GammaDecomposition {
  long m = 0;
  long p = 0;
  long q = 0;
  CPair residual{};
  double max_rounding_offset = 0.0;
};

GammaDecomposition mod_gamma_decompose(const CPair& v, const PeriodGroup& pg);

bool congruent_mod_gamma(const CPair& v, const CPair& w, const PeriodGroup& pg,
                         double tol = 1e-6);

/// Bounded search for a nonzero integer sigma <= bound with sigma*r1 and
/// sigma*r2 both within tol of integers. Returns false when one is found
/// (C^2/Gamma then splits off a C* factor). Diagnostic only: true means no
/// relation up to the bound.
bool is_toroidal(double r1, double r2, int bound, double tol);

}  // namespace nodal_theta
