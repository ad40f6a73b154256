#include "nodal_theta/inversion_branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nodal_theta/errors.hpp"
#include "nodal_theta/rng.hpp"

namespace nodal_theta {

namespace {

LaurentData laurent_for_c1(const AbelJacobi& aj, Complex c1, Complex c2 = {}) {
  return LaurentData(ThetaPullback(aj, {c1, c2}, false));
}

bool clear_of_u2(const AbelJacobi& aj, CPair c) {
  try {
    return laurent_for_c1(aj, c.z, c.w).zeros_in_disk(1.25 * aj.spec().eps()) == 0;
  } catch (const ResampleRequired&) {
  } catch (const BranchStepTooLarge&) {
  }
  return false;
}

// Draws a shift c such that for c and every c + (0, s) used by the checks the
// Laurent data at p2 is nondegenerate and no zero lies within 1.25 eps of p2.
CPair draw_nondegenerate(const AbelJacobi& aj, SplitMix64 rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const CPair c = sample_shift(rng, aj.spec().tau().value());
    bool ok = clear_of_u2(aj, c);
    for (double s : kRationalShifts) {
      if (!ok) break;
      ok = clear_of_u2(aj, c + CPair{0.0, s});
    }
    if (ok) return c;
  }
  throw NoValidEpsilon("could not draw a nondegenerate shift");
}

}  // namespace

EpsilonSelection select_epsilon(const NodalCurveSpec& spec,
                                std::span<const double> candidates,
                                std::uint64_t seed, double quad_tol, int samples) {
  EpsilonSelection out;
  const SplitMix64 root(seed);
  for (double eps : candidates) {
    EpsilonCandidateReport rep;
    rep.eps = eps;
    rep.min_determinant = std::numeric_limits<double>::infinity();
    rep.min_rational_shift = std::numeric_limits<double>::infinity();
    try {
      const AbelJacobi aj(spec.with_eps(eps));
      bool ok = true;
      for (int i = 0; i < samples && ok; ++i) {
        const CPair c = draw_nondegenerate(aj, root.split(static_cast<std::uint64_t>(i)));
        const LaurentData ld = laurent_for_c1(aj, c.z, c.w);
        const MobiusCoeffs m0 = ld.mobius(0.0);
        const double scale = std::abs(m0.A * m0.D);
        for (double radius : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          for (int j = 0; j < 16; ++j) {
            const Complex t = radius * eps * std::polar(1.0, kTwoPi * j / 16.0);
            const MobiusCoeffs m = ld.mobius(t);
            rep.min_determinant =
                std::min(rep.min_determinant, std::abs(m.A * m.D - m.B * m.C) / scale);
          }
        }
        if (rep.min_determinant <= 1e-6) {
          ok = false;
          rep.reason = "determinant bound fails on |t| <= eps";
          break;
        }
        const CPair base = d_map(aj, c, quad_tol);
        rep.max_integer_shift = std::max(
            rep.max_integer_shift, (d_map(aj, c + CPair{0.0, 1.0}, quad_tol) - base).norm());
        for (double s : kRationalShifts) {
          const double moved = (d_map(aj, c + CPair{0.0, s}, quad_tol) - base).norm();
          rep.min_rational_shift = std::min(rep.min_rational_shift, moved);
        }
        if (rep.min_rational_shift <= 1e-4) {
          ok = false;
          rep.reason = "a rational shift (0, s) behaves like a period";
        }
      }
      rep.accepted = ok;
    } catch (const std::invalid_argument& e) {
      rep.reason = e.what();
    } catch (const Error& e) {
      rep.reason = e.what();
    }
    out.reports.push_back(rep);
    if (rep.accepted) {
      out.eps = eps;
      return out;
    }
  }
  std::string msg = "no candidate radius passed the sampled checks:";
  for (const auto& rep : out.reports) {
    msg += " [eps=" + std::to_string(rep.eps) + ": " + rep.reason + "]";
  }
  throw NoValidEpsilon(msg);
}

BranchInverse::BranchInverse(const AbelJacobi& aj, const RiemannConstants& kappa,
                             double quad_tol, double newton_tol, int max_iters)
    : aj_(aj),
      kappa_(kappa),
      quad_tol_(quad_tol),
      newton_tol_(newton_tol),
      max_iters_(max_iters) {
  if (std::abs(kappa.eps - aj.spec().eps()) > 1e-15) {
    throw std::invalid_argument("Riemann constants belong to another eps");
  }
}

CPair BranchInverse::forward(const CPair& c) const {
  return d_map(aj_, c, quad_tol_) + kappa_.value();
}

CPair BranchInverse::solve(const CPair& u, long k, NewtonTrace* trace) const {
  const double eps = aj_.spec().eps();
  const Complex c1 = u.z - kappa_.kappa1;
  // Target for H3(eps; c) / 2 pi i.
  const Complex target = u.w - kappa_.kappa2 - c1 * aj_.r1();

  // H3(eps; c) = Log((C e(c2) + D) / D(0)) up to the continued branch.
  const LaurentData ld0 = laurent_for_c1(aj_, c1);
  const MobiusCoeffs m = ld0.mobius(eps);
  const Complex x = (ld0.beta() * e_func(target) - m.D) / m.C;
  if (!(std::abs(x) > 0.0) || !std::isfinite(std::abs(x))) {
    throw NewtonDivergence("no start value: e(c2) would vanish");
  }
  Complex c2 = std::log(x) / kTwoPiI + static_cast<double>(k);

  for (int it = 0; it < max_iters_; ++it) {
    const LaurentData ld = laurent_for_c1(aj_, c1, c2);
    const Complex f = ld.H3(eps, quad_tol_) / kTwoPiI - target;
    if (it == 0) {
      const double n = std::round(f.real());
      if (n != 0.0 && std::abs(f - n) < 0.25) {
        throw OutsideSheet("target lies on another sheet of the continued log",
                           static_cast<long>(n));
      }
    }
    const Complex df = ld.dH3_dc2(eps, quad_tol_) / kTwoPiI;
    if (std::abs(df) < 1e-10) throw JacobianSingular("dH3/dc2 vanishes");
    const Complex step = f / df;
    c2 -= step;
    if (trace) {
      trace->iterations = it + 1;
      trace->step_sizes.push_back(std::abs(step));
    }
    if (std::abs(step) < newton_tol_ * (1.0 + std::abs(c2))) return {c1, c2};
  }
  throw NewtonDivergence("Newton iteration for beta_k did not converge");
}

ZeroSetSample zero_set_residual(const BranchInverse& inverse, const CPair& u, long k) {
  ZeroSetSample out;
  out.u = u;
  out.u_solved = u;
  try {
    out.c = inverse.solve(u, k);
  } catch (const OutsideSheet& e) {
    out.sheet_offset = e.offset();
    out.u_solved = u + CPair{0.0, static_cast<double>(e.offset())};
    out.c = inverse.solve(out.u_solved, k);
  }
  const AbelJacobi& aj = inverse.abel_jacobi();
  const NodalCurveSpec& spec = aj.spec();
  out.residual = std::abs(big_theta(u.z - out.c.z, u.w - out.c.w, spec.tau(),
                                    aj.r1(), aj.r2(), spec.policy()));
  return out;
}

ZeroSetSample zero_set_residual(const BranchInverse& inverse, Complex P,
                                const BranchedPath& path, long k) {
  if (std::abs(path.end() - P) > 1e-12) {
    throw std::invalid_argument("path does not end at the sample point");
  }
  return zero_set_residual(inverse, inverse.abel_jacobi().phi(path), k);
}

CPair corrected_inverse(const AbelJacobi& aj, const RiemannConstants& kappa,
                        const CPair& u, long k) {
  const NodalCurveSpec& spec = aj.spec();
  const Complex c1 = u.z - kappa.kappa1;
  const LaurentData ld = laurent_for_c1(aj, c1);
  const ThetaPullback& tp = ld.pullback();
  const Complex log_sum = std::log(spec.eps()) +
                          std::log(tp.theta00(tp.shifted(spec.p1()))) -
                          std::log(ld.beta());
  const Complex c2 = u.w - kappa.kappa2 - c1 * aj.r1() - log_sum / kTwoPiI +
                     static_cast<double>(k);
  return {c1, c2};
}

double corrected_zero_set_residual(const AbelJacobi& aj,
                                   const RiemannConstants& kappa, const CPair& u) {
  const CPair c = corrected_inverse(aj, kappa, u, 0);
  return std::abs(big_theta(u.z - c.z, u.w - c.w, aj.spec().tau(), aj.r1(), aj.r2(),
                            aj.spec().policy()));
}

}  // namespace nodal_theta
