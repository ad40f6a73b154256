#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nodal_theta/abel_jacobi.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/riemann_inversion.hpp"

namespace nodal_theta {

inline constexpr std::array<double, 9> kRationalShifts{
    1.0 / 2, 1.0 / 3, 2.0 / 3, 1.0 / 4, 3.0 / 4, 1.0 / 5, 2.0 / 5, 3.0 / 5, 4.0 / 5};

struct EpsilonCandidateReport {
  double eps = 0.0;
  bool accepted = false;
  /// min |AD - BC| / scale over the sampled disk |t| <= eps.
  double min_determinant = 0.0;
  /// min over c and s of |d(c + (0, s)) - d(c)|.
  double min_rational_shift = 0.0;
  /// max over c of |d(c + (0, 1)) - d(c)|.
  double max_integer_shift = 0.0;
  std::string reason;
};

struct EpsilonSelection {
  double eps = 0.0;
  std::vector<EpsilonCandidateReport> reports;
};

/// First candidate for which the determinant bound holds on |t| <= eps and no
/// sampled rational shift (0, s) is a period of d(eps). NoValidEpsilon if none.
EpsilonSelection select_epsilon(const NodalCurveSpec& spec,
                                std::span<const double> candidates,
                                std::uint64_t seed, double quad_tol,
                                int samples = 10);

struct NewtonTrace {
  int iterations = 0;
  std::vector<double> step_sizes;
};

/// Local inverse of u -> d(eps)(c) + kappa(eps) on sheet k.
class BranchInverse {
 public:
  BranchInverse(const AbelJacobi& aj, const RiemannConstants& kappa,
                double quad_tol, double newton_tol = 1e-13, int max_iters = 30);

  const AbelJacobi& abel_jacobi() const { return aj_; }
  const RiemannConstants& kappa() const { return kappa_; }
  double eps() const { return kappa_.eps; }

  /// beta_k(u). The start value solves the closed form of H3 exactly; Newton
  /// then runs on the quadrature H3. OutsideSheet(n) when the solution needs
  /// u2 + n instead of u2; NewtonDivergence or JacobianSingular otherwise.
  CPair solve(const CPair& u, long k, NewtonTrace* trace = nullptr) const;

  /// d(eps)(c) + kappa(eps).
  CPair forward(const CPair& c) const;

 private:
  AbelJacobi aj_;
  RiemannConstants kappa_;
  double quad_tol_;
  double newton_tol_;
  int max_iters_;
};

struct ZeroSetSample {
  CPair u;
  /// u with the integer offset of the second component that made it solvable.
  CPair u_solved;
  long sheet_offset = 0;
  CPair c;
  double residual = 0.0;
};

/// |Theta(u - beta_k(u))| for a point u of C^2. An OutsideSheet offset n is
/// absorbed by solving at u + (0, n), which Theta does not see.
ZeroSetSample zero_set_residual(const BranchInverse& inverse, const CPair& u, long k);

/// Same for u = phi(P) along the given path.
ZeroSetSample zero_set_residual(const BranchInverse& inverse, Complex P,
                                const BranchedPath& path, long k);

/// Inverse of c -> d(eps)(c) + slit(c) + kappa(eps), which closes the
/// congruence W = phi(D) exactly. Closed form, no Newton.
CPair corrected_inverse(const AbelJacobi& aj, const RiemannConstants& kappa,
                        const CPair& u, long k);

/// |Theta(u - corrected_inverse(u))|.
double corrected_zero_set_residual(const AbelJacobi& aj,
                                   const RiemannConstants& kappa, const CPair& u);

}  // namespace nodal_theta
