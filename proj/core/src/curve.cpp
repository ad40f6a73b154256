#include "nodal_theta/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nodal_theta {

namespace {

double frac(double x) { return x - std::floor(x); }

double distance_to_integer(double x) { return std::abs(x - std::round(x)); }

}  // namespace

NodalCurveSpec::NodalCurveSpec(const Params& p)
    : tau_(p.tau),
      p1_(p.p1),
      p2_(p.p2),
      z0_(p.z0),
      q0_(p.q0),
      delta_(p.delta),
      eps_(p.eps),
      policy_(p.policy),
      quad_tol_(p.quad_tol) {}

NodalCurveSpec NodalCurveSpec::create(const Params& params) {
  NodalCurveSpec spec(params);
  params.policy.validate();
  if (!(params.delta > 0.0) || !(params.eps > 0.0)) {
    throw std::invalid_argument("curve: delta and eps must be positive");
  }
  if (!(params.quad_tol > 0.0)) {
    throw std::invalid_argument("curve: quad_tol must be positive");
  }
  spec.p1_ = spec.reduce(params.p1);
  spec.p2_ = spec.reduce(params.p2);
  spec.z0_ = spec.reduce(params.z0);

  if (spec.lattice_distance(spec.p1_, spec.p2_) <= spec.delta_ + spec.eps_) {
    throw std::invalid_argument(
        "curve: disks around p1 and p2 overlap (or p1 = p2 mod Lambda)");
  }
  if (spec.distance_to_boundary(spec.p1_) <= spec.delta_) {
    throw std::invalid_argument("curve: disk around p1 meets the cuts");
  }
  if (spec.distance_to_boundary(spec.p2_) <= spec.eps_) {
    throw std::invalid_argument("curve: disk around p2 meets the cuts");
  }
  if (spec.lattice_distance(spec.z0_, spec.p1_) <= spec.delta_ ||
      spec.lattice_distance(spec.z0_, spec.p2_) <= spec.eps_) {
    throw std::invalid_argument("curve: base point lies in an excluded disk");
  }
  return spec;
}

NodalCurveSpec NodalCurveSpec::with_eps(double eps) const {
  Params p = params();
  p.eps = eps;
  return create(p);
}

NodalCurveSpec::Params NodalCurveSpec::params() const {
  Params p;
  p.tau = tau_.value();
  p.p1 = p1_;
  p.p2 = p2_;
  p.z0 = z0_;
  p.q0 = q0_;
  p.delta = delta_;
  p.eps = eps_;
  p.policy = policy_;
  p.quad_tol = quad_tol_;
  return p;
}

ParallelogramCoords NodalCurveSpec::coords(Complex z) const {
  const Complex d = z - q0_;
  const Complex tau = tau_.value();
  const double t = d.imag() / tau.imag();
  const double s = d.real() - t * tau.real();
  return {s, t};
}

Complex NodalCurveSpec::point(double s, double t) const {
  return q0_ + s + t * tau_.value();
}

Complex NodalCurveSpec::reduce(Complex z) const {
  const ParallelogramCoords st = coords(z);
  return point(frac(st.s), frac(st.t));
}

bool NodalCurveSpec::in_closed_parallelogram(Complex z, double slack) const {
  const ParallelogramCoords st = coords(z);
  return st.s >= -slack && st.s <= 1.0 + slack && st.t >= -slack &&
         st.t <= 1.0 + slack;
}

double NodalCurveSpec::distance_to_boundary(Complex z) const {
  const Complex tau = tau_.value();
  const Complex d = z - q0_;
  // Lines parallel to 1 (t = 0, t = 1) and parallel to tau (s = 0, s = 1).
  const double bottom = std::abs(d.imag());
  const double top = std::abs((d - tau).imag());
  const double left = std::abs((d * std::conj(tau)).imag()) / std::abs(tau);
  const double right = std::abs(((d - 1.0) * std::conj(tau)).imag()) / std::abs(tau);
  return std::min({bottom, top, left, right});
}

double NodalCurveSpec::lattice_distance(Complex a, Complex b) const {
  const Complex base = reduce(a - b + q0_) - q0_;
  double best = std::numeric_limits<double>::infinity();
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      best = std::min(best, std::abs(base + static_cast<double>(i) +
                                     static_cast<double>(j) * tau_.value()));
    }
  }
  return best;
}

Periods derive_periods(const NodalCurveSpec& spec) {
  const Complex dp = spec.p1() - spec.p2();
  const Complex tau = spec.tau().value();
  Periods out;
  out.kappa_coeff = -dp.imag() / tau.imag();
  out.r1 = out.kappa_coeff;
  out.r2 = dp.real() + out.kappa_coeff * tau.real();
  return out;
}

CPair PeriodGroup::combination(long m, long p, long q) const {
  const double md = static_cast<double>(m);
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  return {pd + qd * tau, md + pd * r1 + qd * r2};
}

PeriodGroup period_group(const NodalCurveSpec& spec) {
  const Periods per = derive_periods(spec);
  return {per.r1, per.r2, spec.tau().value()};
}

GammaDecomposition mod_gamma_decompose(const CPair& v, const PeriodGroup& pg) {
  const double q_raw = v.z.imag() / pg.tau.imag();
  const double p_raw = v.z.real() - q_raw * pg.tau.real();
  GammaDecomposition out;
  out.p = std::lround(p_raw);
  out.q = std::lround(q_raw);
  const Complex w_rest = v.w - static_cast<double>(out.p) * pg.r1 -
                         static_cast<double>(out.q) * pg.r2;
  out.m = std::lround(w_rest.real());
  out.residual = v - pg.combination(out.m, out.p, out.q);
  out.max_rounding_offset =
      std::max({distance_to_integer(p_raw), distance_to_integer(q_raw),
                distance_to_integer(w_rest.real())});
  return out;
}

bool congruent_mod_gamma(const CPair& v, const CPair& w, const PeriodGroup& pg,
                         double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("congruence tolerance must be > 0");
  return mod_gamma_decompose(v - w, pg).residual.norm() < tol;
}

bool is_toroidal(double r1, double r2, int bound, double tol) {
  if (bound < 1) throw std::invalid_argument("is_toroidal: bound must be >= 1");
  for (int sigma = 1; sigma <= bound; ++sigma) {
    if (distance_to_integer(sigma * r1) < tol && distance_to_integer(sigma * r2) < tol) {
      return false;
    }
  }
  return true;
}

}  // namespace nodal_theta
