#include "nodal_theta/riemann_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nodal_theta/branch.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/quadrature.hpp"

namespace nodal_theta {

namespace {

constexpr Characteristic kEven{0.0, 0.0};

Characteristic shifted_characteristic(const AbelJacobi& aj) {
  return {-aj.r1(), aj.r2()};
}

struct Box {
  double s0, s1, t0, t1;
};

}  // namespace

double theta_scale(const NodalCurveSpec& spec) {
  double best = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Complex z = i / 8.0 + (j / 8.0) * spec.tau().value();
      best = std::max(best, std::abs(theta_char(kEven, z, spec.tau(), spec.policy())));
    }
  }
  return best;
}

// ---------------------------------------------------------------- pullback

ThetaPullback::ThetaPullback(const AbelJacobi& aj, CPair c, bool check_generic)
    : aj_(aj), c_(c), e_minus_c2_(e_func(-c.w)) {
  if (check_generic) {
    const double guard = std::abs(theta00(shifted(spec().p1())));
    if (guard <= kGenericityTol * theta_scale(spec())) {
      throw NonGeneric("theta00(phi1(p1) - c1) is too small for this c");
    }
  }
}

Complex ThetaPullback::theta00(Complex u) const {
  return theta_char(kEven, u, spec().tau(), spec().policy());
}

Complex ThetaPullback::theta00_dz(Complex u) const {
  return theta_char_dz(kEven, u, spec().tau(), spec().policy());
}

Complex ThetaPullback::theta_r(Complex u) const {
  return theta_char(shifted_characteristic(aj_), u, spec().tau(), spec().policy());
}

Complex ThetaPullback::theta_r_dz(Complex u) const {
  return theta_char_dz(shifted_characteristic(aj_), u, spec().tau(), spec().policy());
}

Complex ThetaPullback::value(Complex z) const {
  const Complex u = shifted(z);
  return theta00(u) + theta_r(u) * e_minus_c2_ * aj_.e_phi2(z);
}

Complex ThetaPullback::derivative(Complex z) const {
  const Complex u = shifted(z);
  const Complex e = e_minus_c2_ * aj_.e_phi2(z);
  return theta00_dz(u) +
         e * (theta_r_dz(u) + theta_r(u) * kTwoPiI * aj_.eta().eta_coeff(z));
}

Complex ThetaPullback::value_on_path(const BranchedPath& path) const {
  const CPair v = aj_.phi(path);
  const Periods& per = aj_.eta().periods();
  return big_theta(v.z - c_.z, v.w - c_.w, spec().tau(), per.r1, per.r2,
                   spec().policy());
}

// ---------------------------------------------------------- argument principle

Complex winding_integral(const ThetaPullback& tp, std::span<const Complex> polygon,
                         double quad_tol) {
  std::vector<Complex> closed(polygon.begin(), polygon.end());
  closed.push_back(polygon.front());
  try {
    return integrate_polyline([&](Complex z) { return tp.log_derivative(z); },
                              std::span<const Complex>(closed), quad_tol) /
           kTwoPiI;
  } catch (const QuadratureFailure&) {
    throw ContourThroughZero("winding integral failed: contour too close to a zero");
  } catch (const PoleAt&) {
    throw ContourThroughZero("winding contour passes through p1 or p2");
  }
}

long winding_number(const ThetaPullback& tp, std::span<const Complex> polygon,
                    double quad_tol) {
  const Complex w = winding_integral(tp, polygon, quad_tol);
  const double n = std::round(w.real());
  if (std::abs(w - n) > 0.1) {
    throw ContourThroughZero("winding integral is not close to an integer");
  }
  return static_cast<long>(n);
}

namespace {

std::array<Complex, 4> box_polygon(const NodalCurveSpec& spec, const Box& b) {
  return {spec.point(b.s0, b.t0), spec.point(b.s1, b.t0), spec.point(b.s1, b.t1),
          spec.point(b.s0, b.t1)};
}

bool pole_inside(const NodalCurveSpec& spec, const Box& b) {
  const ParallelogramCoords st = spec.coords(spec.p2());
  return st.s > b.s0 && st.s < b.s1 && st.t > b.t0 && st.t < b.t1;
}

// The winding integrals only need to resolve integers.
double winding_tol(double quad_tol) { return std::max(quad_tol, 1e-7); }

long box_count(const ThetaPullback& tp, const Box& b, double quad_tol) {
  const auto poly = box_polygon(tp.spec(), b);
  return winding_number(tp, poly, winding_tol(quad_tol)) +
         (pole_inside(tp.spec(), b) ? 1 : 0);
}

std::optional<Complex> newton_in_box(const ThetaPullback& tp, const Box& b) {
  const NodalCurveSpec& spec = tp.spec();
  Complex z = spec.point(0.5 * (b.s0 + b.s1), 0.5 * (b.t0 + b.t1));
  for (int it = 0; it < 60; ++it) {
    Complex step;
    try {
      step = tp.value(z) / tp.derivative(z);
    } catch (const PoleAt&) {
      return std::nullopt;
    }
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
    z -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
  }
  const ParallelogramCoords st = spec.coords(z);
  const double slack = 1e-9;
  if (st.s < b.s0 - slack || st.s > b.s1 + slack || st.t < b.t0 - slack ||
      st.t > b.t1 + slack) {
    return std::nullopt;
  }
  if (!(std::abs(tp.value(z)) < 1e-9)) return std::nullopt;
  return z;
}

void isolate(const ThetaPullback& tp, const Box& b, long n, int depth,
             double quad_tol, std::vector<Complex>& out) {
  if (n <= 0) return;
  if (n == 1) {
    if (auto z = newton_in_box(tp, b)) {
      out.push_back(*z);
      return;
    }
  }
  const NodalCurveSpec& spec = tp.spec();
  const Complex tau = spec.tau().value();
  const double ext_s = b.s1 - b.s0;
  const double ext_t = (b.t1 - b.t0) * std::abs(tau);
  if (depth > 40 || std::max(ext_s, ext_t) < 1e-9) {
    throw ZeroCollision("zeros of the pullback could not be separated");
  }
  const bool split_s = ext_s >= ext_t;
  const ParallelogramCoords pole = spec.coords(spec.p2());
  const double clearance = 0.25 * std::min(spec.delta(), spec.eps());

  for (double offset : {0.0, 0.11, -0.13, 0.23, -0.27, 0.37, -0.39}) {
    Box lo = b;
    Box hi = b;
    if (split_s) {
      const double cut = b.s0 + (0.5 + 0.5 * offset) * ext_s;
      // Distance from p2 to the line s = cut.
      if (std::abs(pole.s - cut) * tau.imag() / std::abs(tau) < clearance) continue;
      lo.s1 = cut;
      hi.s0 = cut;
    } else {
      const double cut = b.t0 + (0.5 + 0.5 * offset) * (b.t1 - b.t0);
      if (std::abs(pole.t - cut) * tau.imag() < clearance) continue;
      lo.t1 = cut;
      hi.t0 = cut;
    }
    long n_lo = 0;
    long n_hi = 0;
    try {
      n_lo = box_count(tp, lo, quad_tol);
      n_hi = box_count(tp, hi, quad_tol);
    } catch (const ContourThroughZero&) {
      continue;
    }
    if (n_lo < 0 || n_hi < 0 || n_lo + n_hi != n) continue;
    isolate(tp, lo, n_lo, depth + 1, quad_tol, out);
    isolate(tp, hi, n_hi, depth + 1, quad_tol, out);
    return;
  }
  throw ZeroCollision("no admissible subdivision separates the zeros");
}

}  // namespace

long count_zeros(const ThetaPullback& tp, double quad_tol) {
  return box_count(tp, Box{0.0, 1.0, 0.0, 1.0}, quad_tol);
}

Complex log_integral_alpha(const ThetaPullback& tp, double quad_tol) {
  const Complex q0 = tp.spec().q0();
  return integrate_segment([&](Complex z) { return tp.log_derivative(z); }, q0,
                           q0 + 1.0, quad_tol) /
         kTwoPiI;
}

Complex log_integral_beta(const ThetaPullback& tp, double quad_tol) {
  const Complex q0 = tp.spec().q0();
  return integrate_segment([&](Complex z) { return tp.log_derivative(z); }, q0,
                           q0 + tp.spec().tau().value(), quad_tol) /
         kTwoPiI;
}

std::array<Complex, 2> locate_zeros(const ThetaPullback& tp, double quad_tol) {
  const long n = count_zeros(tp, quad_tol);
  if (n != 2) {
    throw ZeroCollision("expected two zeros in the parallelogram, counted " +
                        std::to_string(n));
  }
  std::vector<Complex> zeros;
  isolate(tp, Box{0.0, 1.0, 0.0, 1.0}, n, 0, quad_tol, zeros);
  if (zeros.size() != 2 || std::abs(zeros[0] - zeros[1]) < 1e-6) {
    throw ZeroCollision("zeros of the pullback are not distinct");
  }
  const NodalCurveSpec& spec = tp.spec();
  for (Complex z : zeros) {
    if (spec.lattice_distance(z, spec.p1()) <= spec.delta() ||
        spec.lattice_distance(z, spec.p2()) <= spec.eps()) {
      throw NonGeneric("a zero of the pullback lies in an excluded disk");
    }
  }
  return {zeros[0], zeros[1]};
}

// ---------------------------------------------------------------- Laurent data

Complex g_func(const AbelJacobi& aj, Complex t, double quad_tol) {
  const double t0 = aj.spec().eps();
  const Complex p2 = aj.spec().p2();
  const Complex h1_integral = integrate_segment(
      [&](Complex s) { return aj.eta().h1_at_p2(s); }, Complex(t0, 0.0), t, quad_tol);
  return t0 * aj.e_phi2(p2 + t0) * std::exp(kTwoPiI * h1_integral);
}

LaurentData::LaurentData(const ThetaPullback& tp)
    : tp_(tp),
      u0_(tp.shifted(tp.spec().p2())),
      e_minus_c2_(e_func(-tp.c().w)),
      g0_(g(0.0)),
      beta_(tp.theta_r(u0_) * g0_) {
  if (std::abs(tp.theta_r(u0_)) <= kGenericityTol * theta_scale(tp.spec())) {
    throw DegenerateC("leading Laurent coefficient at p2 vanishes for this c");
  }
}

Complex LaurentData::g(Complex t) const {
  const AbelJacobi& aj = tp_.abel_jacobi();
  const NodalCurveSpec& spec = aj.spec();
  const Complex z0 = spec.z0();
  return aj.eta().t_over_theta11(t) * aj.eta().theta11(spec.p2() - spec.p1() + t) *
         e_func(aj.r1() * (spec.p2() + t - z0)) / aj.theta_quotient(z0);
}

Complex LaurentData::g_dt(Complex t) const {
  return kTwoPiI * tp_.abel_jacobi().eta().h1_at_p2(t) * g(t);
}

Complex LaurentData::c_minus1() const { return beta_ * e_minus_c2_; }

MobiusCoeffs LaurentData::mobius(Complex t) const {
  const Complex u = u0_ + t;
  const Complex th0 = tp_.theta00(u);
  const Complex thr = tp_.theta_r(u);
  const Complex gt = g(t);
  MobiusCoeffs m;
  m.A = th0 + t * tp_.theta00_dz(u);
  m.B = tp_.theta_r_dz(u) * gt + thr * g_dt(t);
  m.C = t * th0;
  m.D = thr * gt;
  return m;
}

Complex LaurentData::alpha1(Complex t) const { return tp_.theta00(u0_ + t); }

Complex LaurentData::alpha2(Complex t) const {
  // (D(t) - D(0)) / t, taken as the mean of D' = B over [0, t] near 0.
  if (std::abs(t) < 1e-2) {
    return gauss_mean([&](double x) { return mobius(x * t).B; });
  }
  return (mobius(t).D - beta_) / t;
}

Complex LaurentData::h2(Complex t) const {
  return alpha1(t) + alpha2(t) * e_minus_c2_;
}

Complex LaurentData::h3(Complex t) const {
  const MobiusCoeffs m = mobius(t);
  return (m.A + m.B * e_minus_c2_) / (m.C + m.D * e_minus_c2_);
}

Complex LaurentData::dh3_dc2(Complex t) const {
  const MobiusCoeffs m = mobius(t);
  const Complex den = m.C + m.D * e_minus_c2_;
  return kTwoPiI * e_minus_c2_ * (m.A * m.D - m.B * m.C) / (den * den);
}

Complex LaurentData::h3_at_zero_closed_form() const {
  return tp_.theta00(u0_) / (tp_.theta_r(u0_) * g0_ * e_minus_c2_);
}

Complex LaurentData::h3_at_zero_limit() const {
  // Mean value of T'/T + 1/t over the circle |t| = eps/2; the aliasing error
  // of the 32-point rule is of order 2^-32.
  const int n = 32;
  const double r = 0.5 * tp_.spec().eps();
  const Complex p2 = tp_.spec().p2();
  Complex sum{};
  for (int k = 0; k < n; ++k) {
    const Complex t = r * std::polar(1.0, kTwoPi * k / n);
    sum += tp_.log_derivative(p2 + t) + 1.0 / t;
  }
  return sum / static_cast<double>(n);
}

Complex LaurentData::H3(Complex t, double quad_tol) const {
  return integrate_segment([&](Complex s) { return h3(s); }, 0.0, t, quad_tol);
}

Complex LaurentData::dH3_dc2(Complex t, double quad_tol) const {
  return integrate_segment([&](Complex s) { return dh3_dc2(s); }, 0.0, t, quad_tol);
}

Complex LaurentData::H3_closed_form(Complex t) const {
  const Complex d0 = beta_ * e_minus_c2_;
  ContinuousLog log(
      [&](double x) {
        const MobiusCoeffs m = mobius(x * t);
        return (m.C + m.D * e_minus_c2_) / d0;
      },
      Complex{});
  return log.at_end();
}

long LaurentData::zeros_in_disk(double radius) const {
  ContinuousLog log([&](double x) {
    const MobiusCoeffs m = mobius(radius * e_func(Complex(x, 0.0)));
    return m.C + m.D * e_minus_c2_;
  });
  return std::lround(log.delta().imag() / kTwoPi);
}

// ------------------------------------------------------------ Riemann constants

Complex a_eps(const AbelJacobi& aj, double quad_tol) {
  const Complex p2 = aj.spec().p2();
  const double eps = aj.spec().eps();
  const Phi2Track track =
      aj.track([&](double x) { return p2 + eps * e_func(Complex(x, 0.0)); },
               aj.phi2(p2 + eps));
  return integrate_interval([&](double x) { return track(x); }, 0.0, 1.0, quad_tol);
}

const char* to_string(KappaVariant v) {
  return v == KappaVariant::half_tau ? "half_tau" : "full_tau";
}

RiemannConstants riemann_constants(const AbelJacobi& aj, KappaVariant variant,
                                   double quad_tol) {
  const NodalCurveSpec& spec = aj.spec();
  const Complex q0 = spec.q0();
  const Complex z0 = spec.z0();
  const Complex tau = spec.tau().value();
  const double v = variant == KappaVariant::half_tau ? 0.5 : 1.0;

  RiemannConstants out;
  out.variant = variant;
  out.eps = spec.eps();
  out.alpha_phi1 =
      integrate_segment([&](Complex z) { return z - z0; }, q0, q0 + 1.0, quad_tol);
  const Phi2Track track = aj.track([&](double x) { return q0 + x; }, aj.phi2(q0));
  out.alpha_phi2 =
      integrate_interval([&](double x) { return track(x); }, 0.0, 1.0, quad_tol);
  out.a_eps = a_eps(aj, quad_tol);

  const Complex phi1_q0 = q0 - z0;
  out.kappa1 = -v * tau - phi1_q0 + (spec.p2() - z0) + out.alpha_phi1;
  out.kappa2 = (-v * tau - phi1_q0) * aj.r1() + out.a_eps + out.alpha_phi2;
  return out;
}

CPair d_map(const AbelJacobi& aj, CPair c, double quad_tol) {
  const LaurentData ld(ThetaPullback(aj, c, false));
  return {c.z, c.z * aj.r1() + ld.H3(aj.spec().eps(), quad_tol) / kTwoPiI};
}

Complex slit_term(const ThetaPullback& tp) {
  const NodalCurveSpec& spec = tp.spec();
  return std::log(tp.theta00(tp.shifted(spec.p1())) /
                  tp.value(spec.p2() + spec.eps())) /
         kTwoPiI;
}

Thm51Result verify_thm51(const AbelJacobi& aj, CPair c,
                         const std::array<RiemannConstants, 2>& kappas,
                         double quad_tol, double residual_tol) {
  const ThetaPullback tp(aj, c);
  Thm51Result out;
  out.c = c;
  out.zero_count = count_zeros(tp, quad_tol);
  out.zeros = locate_zeros(tp, quad_tol);
  out.W = aj.divisor_image(std::span<const Complex>(out.zeros));
  out.d = d_map(aj, c, quad_tol);
  out.slit = slit_term(tp);

  const PeriodGroup pg = aj.period_group();
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    Thm51Variant& v = out.variants[i];
    v.variant = kappas[i].variant;
    v.kappa = kappas[i].value();
    const CPair diff = out.W - out.d - v.kappa;
    v.decomposition = mod_gamma_decompose(diff, pg);
    v.residual = v.decomposition.residual.norm();
    v.slit_decomposition = mod_gamma_decompose(diff - CPair{0.0, out.slit}, pg);
    v.slit_residual = v.slit_decomposition.residual.norm();
    if (!out.closing && v.residual < residual_tol) out.closing = v.variant;
    if (!out.slit_closing && v.slit_residual < residual_tol) out.slit_closing = v.variant;
  }
  return out;
}

Thm51Result verify_thm51(const AbelJacobi& aj, CPair c, double quad_tol,
                         double residual_tol) {
  const std::array<RiemannConstants, 2> kappas{
      riemann_constants(aj, KappaVariant::half_tau, quad_tol),
      riemann_constants(aj, KappaVariant::full_tau, quad_tol)};
  return verify_thm51(aj, c, kappas, quad_tol, residual_tol);
}

}  // namespace nodal_theta
