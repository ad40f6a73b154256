#include "nodal_theta_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "nodal_theta/abel_jacobi.hpp"
#include "nodal_theta/differentials.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/inversion_branches.hpp"
#include "nodal_theta/riemann_inversion.hpp"
#include "nodal_theta/rng.hpp"
#include "nodal_theta/theta.hpp"
#include "nodal_theta_cli/parallel.hpp"
#include "nodal_theta_cli/svg.hpp"

namespace nodal_theta::cli {

namespace {

constexpr int kIdentitySamples = 100;
constexpr int kCutPoints = 20;
constexpr int kMaxDraws = 200;

// Stream indices, so that each suite draws from its own substream of run.seed.
constexpr std::uint64_t kStreamIdentities = 1;
constexpr std::uint64_t kStreamCuts = 2;
constexpr std::uint64_t kStreamThm51 = 3;
constexpr std::uint64_t kStreamThm66 = 4;
constexpr std::uint64_t kStreamPlot = 5;

double dist_to_integer(Complex x) { return std::abs(x - std::round(x.real())); }

double relative(Complex value, Complex expected) {
  const double scale = std::max(std::abs(expected), 1e-300);
  return std::abs(value - expected) / scale;
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

/// Draws c from rng until the pullback is generic and the Laurent data at p2
/// is usable; counts rejected draws.
struct GenericDraw {
  CPair c;
  int resamples = 0;
};

GenericDraw draw_generic(const AbelJacobi& aj, SplitMix64& rng) {
  const Complex tau = aj.spec().tau().value();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const CPair c = sample_shift(rng, tau);
    try {
      ThetaPullback tp(aj, c);
      LaurentData ld(tp);
      (void)ld;
      return {c, attempt};
    } catch (const ResampleRequired&) {
    }
  }
  throw NonGeneric("no generic shift in " + std::to_string(kMaxDraws) + " draws");
}

// identities ----------------------------------------------------------------

struct IdentityRow {
  std::string test;
  double max_error = 0.0;
  double threshold = 0.0;
};

SuiteResult identities_table(const std::vector<IdentityRow>& rows) {
  SuiteResult r;
  r.name = "identities";
  r.table.header = {"test", "max_error", "threshold", "pass"};
  r.passed = true;
  for (const auto& row : rows) {
    const bool ok = row.max_error < row.threshold;
    r.passed = r.passed && ok;
    r.table.add({row.test, fmt(row.max_error), fmt(row.threshold), fmt(ok)});
  }
  return r;
}

// Cauchy integral for f'(z) on a circle of radius 1/4, trapezoid rule.
Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z) {
  constexpr int n = 64;
  constexpr double radius = 0.25;
  Complex sum{};
  for (int k = 0; k < n; ++k) {
    const Complex dir = std::polar(1.0, kTwoPi * k / n);
    sum += f(z + radius * dir) / (radius * dir);
  }
  return sum / static_cast<double>(n);
}

}  // namespace

SuiteResult run_identities(const RunConfig& cfg) {
  const ModularParameter tau(cfg.tau);
  const SeriesPolicy policy{cfg.tol.series, cfg.tol.series_max_index};
  const Periods periods = derive_periods(cfg.curve(cfg.eps_candidates.front()));
  SplitMix64 rng = SplitMix64(cfg.seed).split(kStreamIdentities);

  const auto random_z = [&] { return rng.uniform(-1, 1) + rng.uniform(-1, 1) * cfg.tau; };
  const auto random_shift = [&] { return static_cast<long>(std::floor(rng.uniform(-3, 4))); };

  IdentityRow quasi{"quasi_periodicity", 0.0, cfg.tol.identity};
  IdentityRow rho0{"rho0_automorphy", 0.0, cfg.tol.identity};
  IdentityRow big{"big_theta_automorphy", 0.0, cfg.tol.identity};
  IdentityRow even{"evenness", 0.0, cfg.tol.identity};
  IdentityRow deriv{"derivative_cauchy", 0.0, cfg.tol.identity};
  for (int i = 0; i < kIdentitySamples; ++i) {
    const Characteristic ch{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Complex z = random_z();
    const long p = random_shift();
    const long q = random_shift();
    const Complex shift = static_cast<double>(p) + static_cast<double>(q) * cfg.tau;
    quasi.max_error = std::max(
        quasi.max_error,
        relative(theta_char(ch, z + shift, tau, policy),
                 translation_factor(ch, p, q, z, tau) * theta_char(ch, z, tau, policy)));

    const Complex th = theta_char({}, z, tau, policy);
    rho0.max_error = std::max(
        {rho0.max_error,
         relative(theta_char({}, z + 1.0, tau, policy),
                  rho0_factor(LatticeGenerator::one, z, tau) * th),
         relative(theta_char({}, z + cfg.tau, tau, policy),
                  rho0_factor(LatticeGenerator::tau, z, tau) * th)});

    const Complex w{rng.uniform(0, 1), rng.uniform(-0.5, 0.5)};
    const Complex w_shift = static_cast<double>(p) * periods.r1 +
                            static_cast<double>(q) * periods.r2;
    big.max_error = std::max(
        big.max_error,
        relative(big_theta(z + shift, w + w_shift, tau, periods.r1, periods.r2, policy),
                 translation_factor({}, p, q, z, tau) *
                     big_theta(z, w, tau, periods.r1, periods.r2, policy)));

    even.max_error = std::max(even.max_error, relative(theta_char({}, -z, tau, policy), th));

    const auto f = [&](Complex x) { return theta_char(ch, x, tau, policy); };
    deriv.max_error = std::max(
        deriv.max_error, relative(theta_char_dz(ch, z, tau, policy), cauchy_derivative(f, z)));
  }
  IdentityRow odd{"odd_vanishing", std::abs(theta_char({0.5, 0.5}, 0.0, tau, policy)), 1e-12};

  SuiteResult r = identities_table({quasi, rho0, big, even, odd, deriv});
  r.log.push_back("tau = " + fmt(cfg.tau.real()) + "," + fmt(cfg.tau.imag()) + "; " +
                  std::to_string(kIdentitySamples) + " random samples");
  return r;
}

SuiteResult run_periods(const RunConfig& cfg) {
  const NodalCurveSpec spec = cfg.curve(cfg.eps_candidates.front());
  const AbelJacobi aj(spec);
  const Periods closed = derive_periods(spec);

  SuiteResult r;
  r.name = "periods";
  r.table.header = {"test", "value_re", "value_im", "expected_re", "expected_im",
                    "error", "pass"};
  r.passed = true;
  const auto add = [&](const std::string& test, Complex value, Complex expected,
                       double error, bool ok) {
    std::vector<std::string> row{test};
    push_complex(row, value);
    push_complex(row, expected);
    row.push_back(fmt(error));
    row.push_back(fmt(ok));
    r.table.add(std::move(row));
    r.passed = r.passed && ok;
  };
  const auto period_row = [&](const std::string& test, Contour contour, Complex expected) {
    const Complex v = period_integral(spec, contour, cfg.tol.quad);
    const double err = std::abs(v - expected);
    add(test, v, expected, err, err < cfg.tol.period);
  };
  period_row("gamma1", Contour::gamma1, 1.0);
  period_row("gamma2", Contour::gamma2, -1.0);
  period_row("alpha", Contour::alpha, closed.r1);
  period_row("beta", Contour::beta, closed.r2);

  // Cut relations. phi2 jumps are compared modulo the integer monodromy.
  const Complex tau = spec.tau().value();
  const Complex q0 = spec.q0();
  double alpha_phi = 0.0, beta_phi = 0.0;
  for (int i = 0; i < kCutPoints; ++i) {
    const double s = (i + 0.5) / kCutPoints;
    {
      const Complex P = q0 + s;
      const CPair jump = aj.phi(P + tau) - aj.phi(P);
      alpha_phi = std::max(alpha_phi, std::abs(jump.z - tau) + dist_to_integer(jump.w - closed.r2));
    }
    {
      const Complex P = q0 + 1.0 + s * tau;
      const CPair jump = aj.phi(P - 1.0) - aj.phi(P);
      beta_phi = std::max(beta_phi, std::abs(jump.z + 1.0) + dist_to_integer(jump.w + closed.r1));
    }
  }
  add("cut_alpha_phi", alpha_phi, 0.0, alpha_phi, alpha_phi < cfg.tol.period);
  add("cut_beta_phi", beta_phi, 0.0, beta_phi, beta_phi < cfg.tol.period);

  SplitMix64 rng = SplitMix64(cfg.seed).split(kStreamCuts);
  const GenericDraw draw = draw_generic(aj, rng);
  const ThetaPullback tp(aj, draw.c);
  double alpha_t = 0.0, beta_t = 0.0;
  for (int i = 0; i < kCutPoints; ++i) {
    const double s = (i + 0.5) / kCutPoints;
    const Complex Pa = q0 + s;
    alpha_t = std::max(alpha_t, relative(tp.value(Pa + tau),
                                         e_func(-0.5 * tau - (aj.phi1(Pa) - draw.c.z)) *
                                             tp.value(Pa)));
    const Complex Pb = q0 + 1.0 + s * tau;
    beta_t = std::max(beta_t, relative(tp.value(Pb - 1.0), tp.value(Pb)));
  }
  add("cut_alpha_theta", alpha_t, 0.0, alpha_t, alpha_t < cfg.tol.period);
  add("cut_beta_theta", beta_t, 0.0, beta_t, beta_t < cfg.tol.period);

  const bool toroidal = is_toroidal(closed.r1, closed.r2, 1000, 1e-9);
  add("is_toroidal", toroidal ? 1.0 : 0.0, 0.0, 0.0, true);
  r.log.push_back("r1 = " + fmt(closed.r1) + ", r2 = " + fmt(closed.r2) +
                  ", kappa_coeff = " + fmt(closed.kappa_coeff));
  r.log.push_back(std::string("is_toroidal (sigma <= 1000): ") + fmt(toroidal));
  return r;
}

SuiteResult run_thm51(const RunConfig& cfg) {
  const NodalCurveSpec spec = cfg.curve(cfg.eps_candidates.front());
  const AbelJacobi aj(spec);
  const std::array<RiemannConstants, 2> kappas{
      riemann_constants(aj, KappaVariant::half_tau, cfg.tol.quad),
      riemann_constants(aj, KappaVariant::full_tau, cfg.tol.quad)};
  const SplitMix64 base = SplitMix64(cfg.seed).split(kStreamThm51);
  const Complex tau = spec.tau().value();

  struct Sample {
    Thm51Result result;
    int resamples = 0;
    double alpha_log_error = 0.0;
    double beta_log_error = 0.0;
    std::vector<std::string> reasons;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(cfg.samples));
  parallel_for(samples.size(), [&](std::size_t i) {
    SplitMix64 rng = base.split(i);
    Sample& out = samples[i];
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxDraws) throw NonGeneric("sample " + std::to_string(i) + ": no generic shift");
      const CPair c = sample_shift(rng, tau);
      try {
        out.result = verify_thm51(aj, c, kappas, cfg.tol.quad, cfg.tol.congruence);
        const ThetaPullback tp(aj, c);
        out.alpha_log_error = dist_to_integer(log_integral_alpha(tp, cfg.tol.quad));
        const Complex expected = -0.5 * tau - (aj.phi1(spec.q0()) - c.z);
        out.beta_log_error = dist_to_integer(log_integral_beta(tp, cfg.tol.quad) - expected);
        out.resamples = attempt;
        return;
      } catch (const ResampleRequired& e) {
        out.reasons.push_back(e.what());
      } catch (const QuadratureFailure& e) {
        out.reasons.push_back(e.what());
      } catch (const BranchStepTooLarge& e) {
        out.reasons.push_back(e.what());
      }
    }
  });

  SuiteResult r;
  r.name = "thm51";
  r.table.header = {"sample", "resamples", "c1_re", "c1_im", "c2_re", "c2_im", "n_zeros",
                    "zero1_re", "zero1_im", "zero2_re", "zero2_im", "W1_re", "W1_im",
                    "W2_re", "W2_im", "d1_re", "d1_im", "d2_re", "d2_im",
                    "residual_half_tau", "residual_full_tau", "slit_re", "slit_im",
                    "slit_residual_half_tau", "slit_residual_full_tau",
                    "alpha_log_error", "beta_log_error", "closing", "slit_closing"};
  bool all_two = true;
  bool logs_ok = true;
  int resamples = 0;
  std::optional<KappaVariant> closing_all;
  std::optional<KappaVariant> slit_all;
  bool closing_consistent = true;
  bool slit_consistent = true;
  std::array<double, 2> max_res{0.0, 0.0}, max_slit{0.0, 0.0};
  double max_alpha = 0.0, max_beta = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    const Thm51Result& t = s.result;
    resamples += s.resamples;
    for (const auto& reason : s.reasons) r.log.push_back("sample " + std::to_string(i) + " resampled: " + reason);
    all_two = all_two && t.zero_count == 2;
    logs_ok = logs_ok && s.alpha_log_error < cfg.tol.period && s.beta_log_error < cfg.tol.period;
    max_alpha = std::max(max_alpha, s.alpha_log_error);
    max_beta = std::max(max_beta, s.beta_log_error);
    for (int v = 0; v < 2; ++v) {
      max_res[v] = std::max(max_res[v], t.variants[v].residual);
      max_slit[v] = std::max(max_slit[v], t.variants[v].slit_residual);
    }
    const auto merge = [](std::optional<KappaVariant>& acc, const std::optional<KappaVariant>& v,
                          bool& consistent, bool first) {
      if (first) acc = v;
      else if (acc != v) consistent = false;
    };
    merge(closing_all, t.closing, closing_consistent, i == 0);
    merge(slit_all, t.slit_closing, slit_consistent, i == 0);

    std::vector<std::string> row{fmt(static_cast<long>(i)), fmt(s.resamples)};
    push_complex(row, t.c.z);
    push_complex(row, t.c.w);
    row.push_back(fmt(t.zero_count));
    push_complex(row, t.zeros[0]);
    push_complex(row, t.zeros[1]);
    push_complex(row, t.W.z);
    push_complex(row, t.W.w);
    push_complex(row, t.d.z);
    push_complex(row, t.d.w);
    row.push_back(fmt(t.variants[0].residual));
    row.push_back(fmt(t.variants[1].residual));
    push_complex(row, t.slit);
    row.push_back(fmt(t.variants[0].slit_residual));
    row.push_back(fmt(t.variants[1].slit_residual));
    row.push_back(fmt(s.alpha_log_error));
    row.push_back(fmt(s.beta_log_error));
    row.push_back(t.closing ? to_string(*t.closing) : "none");
    row.push_back(t.slit_closing ? to_string(*t.slit_closing) : "none");
    r.table.add(std::move(row));
  }
  const auto tag = [](const std::optional<KappaVariant>& v, bool consistent) -> std::string {
    if (!consistent) return "mixed";
    return v ? to_string(*v) : "none";
  };
  const std::string closing = tag(closing_all, closing_consistent);
  const std::string slit_closing = tag(slit_all, slit_consistent);
  {
    std::vector<std::string> row(r.table.header.size(), "");
    row[0] = "summary";
    row[1] = fmt(resamples);
    row[6] = fmt(all_two);
    row[19] = fmt(max_res[0]);
    row[20] = fmt(max_res[1]);
    row[23] = fmt(max_slit[0]);
    row[24] = fmt(max_slit[1]);
    row[25] = fmt(max_alpha);
    row[26] = fmt(max_beta);
    row[27] = closing;
    row[28] = slit_closing;
    r.table.add(std::move(row));
  }

  const bool closes = closing_consistent && closing_all.has_value();
  r.passed = all_two && logs_ok && closes;
  r.log.push_back("eps = " + fmt(spec.eps()) + ", samples = " + std::to_string(cfg.samples) +
                  ", resampled draws = " + std::to_string(resamples));
  r.log.push_back("zero count 2 for every sample: " + fmt(all_two));
  r.log.push_back("max residual: half_tau " + fmt(max_res[0]) + ", full_tau " + fmt(max_res[1]));
  r.log.push_back("closing variant: " + closing);
  r.log.push_back("with slit term: max residual half_tau " + fmt(max_slit[0]) + ", full_tau " +
                  fmt(max_slit[1]) + "; closing variant: " + slit_closing);
  return r;
}

SuiteResult run_thm66(const RunConfig& cfg) {
  const NodalCurveSpec base_spec = cfg.curve(cfg.eps_candidates.front());
  SuiteResult r;
  r.name = "thm66";
  r.table.header = {"point", "i", "j", "P_re", "P_im", "status", "sheet_offset",
                    "residual", "corrected_residual", "k_independence", "round_trip"};

  EpsilonSelection sel;
  try {
    sel = select_epsilon(base_spec, cfg.eps_candidates, cfg.seed, cfg.tol.quad, cfg.samples);
  } catch (const NoValidEpsilon& e) {
    r.log.push_back(std::string("no valid eps: ") + e.what());
    r.passed = false;
    return r;
  }
  for (const auto& rep : sel.reports) {
    r.log.push_back("eps " + fmt(rep.eps) + (rep.accepted ? " accepted" : " rejected") +
                    ": min_det " + fmt(rep.min_determinant) + ", min_rational_shift " +
                    fmt(rep.min_rational_shift) + ", max_integer_shift " +
                    fmt(rep.max_integer_shift) + (rep.reason.empty() ? "" : " (" + rep.reason + ")"));
  }

  const NodalCurveSpec spec = base_spec.with_eps(sel.eps);
  const AbelJacobi aj(spec);
  const RiemannConstants kappa = riemann_constants(aj, KappaVariant::half_tau, cfg.tol.quad);
  const BranchInverse inverse(aj, kappa, cfg.tol.quad, cfg.tol.newton);
  const ModularParameter& tau = spec.tau();
  const auto theta_at = [&](const CPair& u) {
    return big_theta(u.z, u.w, tau, aj.r1(), aj.r2(), spec.policy());
  };

  struct Point {
    int i = 0, j = 0;
    Complex P;
    std::string status = "skipped";
    long sheet_offset = 0;
    double residual = 0.0, corrected = 0.0, k_independence = 0.0, round_trip = 0.0;
    std::string note;
  };
  std::vector<Point> points;
  const int g = cfg.grid;
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) {
      Point pt;
      pt.i = i;
      pt.j = j;
      pt.P = spec.point((i + 0.5) / g, (j + 0.5) / g);
      points.push_back(pt);
    }
  }
  const double keep_p2 = 1.5 * spec.eps();
  const double keep_p1 = 1.5 * spec.delta();

  parallel_for(points.size(), [&](std::size_t n) {
    Point& pt = points[n];
    if (spec.lattice_distance(pt.P, spec.p2()) <= keep_p2 ||
        spec.lattice_distance(pt.P, spec.p1()) <= keep_p1) {
      pt.note = "near a pole";
      return;
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
      const Complex P = attempt == 0 ? pt.P : pt.P + Complex(1e-3, 1e-3);
      try {
        const BranchedPath path = aj.default_path(P);
        const ZeroSetSample s0 = zero_set_residual(inverse, P, path, 0);
        const ZeroSetSample s1 = zero_set_residual(inverse, P, path, 1);
        pt.P = P;
        pt.status = attempt == 0 ? "ok" : "perturbed";
        pt.sheet_offset = s0.sheet_offset;
        pt.residual = s0.residual;
        pt.k_independence = std::abs(theta_at(s0.u_solved - s0.c) - theta_at(s1.u_solved - s1.c));
        pt.round_trip = (inverse.forward(s0.c) - s0.u_solved).norm();
        pt.corrected = corrected_zero_set_residual(aj, kappa, s0.u);
        if (attempt > 0) pt.note.clear();
        return;
      } catch (const NewtonDivergence& e) {
        pt.note = e.what();
      } catch (const JacobianSingular& e) {
        pt.note = e.what();
      } catch (const ResampleRequired& e) {
        pt.note = e.what();
      } catch (const QuadratureFailure& e) {
        // A zero of the pullback next to [p2, p2 + eps]: H3 is near a pole.
        pt.note = e.what();
      } catch (const BranchStepTooLarge& e) {
        pt.note = e.what();
      }
    }
  });

  int evaluated = 0;
  double max_residual = 0.0, max_corrected = 0.0, max_k = 0.0;
  for (std::size_t n = 0; n < points.size(); ++n) {
    const Point& pt = points[n];
    std::vector<std::string> row{fmt(static_cast<long>(n)), fmt(pt.i), fmt(pt.j)};
    push_complex(row, pt.P);
    row.push_back(pt.status);
    if (pt.status == "skipped") {
      r.log.push_back("point " + std::to_string(n) + " skipped: " + pt.note);
      row.insert(row.end(), 5, "");
    } else {
      ++evaluated;
      max_residual = std::max(max_residual, pt.residual);
      max_corrected = std::max(max_corrected, pt.corrected);
      max_k = std::max(max_k, pt.k_independence);
      row.push_back(fmt(pt.sheet_offset));
      row.push_back(fmt(pt.residual));
      row.push_back(fmt(pt.corrected));
      row.push_back(fmt(pt.k_independence));
      row.push_back(fmt(pt.round_trip));
    }
    r.table.add(std::move(row));
  }

  // Off-curve control: a random point of C^2.
  SplitMix64 rng = SplitMix64(cfg.seed).split(kStreamThm66);
  const CPair u_off = sample_shift(rng, tau.value());
  double off_residual = 0.0;
  std::string off_status = "ok";
  try {
    off_residual = zero_set_residual(inverse, u_off, 0).residual;
  } catch (const Error& e) {
    off_status = "failed";
    r.log.push_back(std::string("off-curve control: ") + e.what());
  }
  const double off_corrected = corrected_zero_set_residual(aj, kappa, u_off);
  {
    std::vector<std::string> row{"off_curve", "", ""};
    push_complex(row, u_off.z);
    row.push_back(off_status);
    row.push_back("");
    row.push_back(fmt(off_residual));
    row.push_back(fmt(off_corrected));
    row.push_back("");
    row.push_back("");
    r.table.add(std::move(row));
  }
  {
    std::vector<std::string> row(r.table.header.size(), "");
    row[0] = "summary";
    row[5] = std::to_string(evaluated) + "_points";
    row[7] = fmt(max_residual);
    row[8] = fmt(max_corrected);
    row[9] = fmt(max_k);
    r.table.add(std::move(row));
  }

  const bool on_curve = evaluated >= 20 && max_residual < cfg.tol.residual;
  const bool control = off_status == "ok" && off_residual > 1e-3;
  const bool k_ok = max_k < 1e-9;
  r.passed = on_curve && control && k_ok;
  r.log.push_back("eps = " + fmt(sel.eps) + ", evaluated points = " + std::to_string(evaluated));
  r.log.push_back("max zero-set residual " + fmt(max_residual) + " (threshold " +
                  fmt(cfg.tol.residual) + "): " + status(on_curve));
  r.log.push_back("off-curve control residual " + fmt(off_residual) + " (> 1e-3): " + status(control));
  r.log.push_back("k-independence " + fmt(max_k) + " (< 1e-9): " + status(k_ok));
  r.log.push_back("with slit term: max residual " + fmt(max_corrected) +
                  ", off-curve residual " + fmt(off_corrected));
  return r;
}

SuiteResult run_zeroset_plot(const RunConfig& cfg) {
  const NodalCurveSpec spec = cfg.curve(cfg.eps_candidates.front());
  const AbelJacobi aj(spec);
  SplitMix64 rng = SplitMix64(cfg.seed).split(kStreamPlot);

  SuiteResult r;
  r.name = "zeroset-plot";
  r.table.header = {"marker", "re", "im"};

  std::optional<ThetaPullback> tp;
  std::array<Complex, 2> zeros{};
  int resamples = 0;
  for (; resamples < kMaxDraws && !tp; ++resamples) {
    const GenericDraw draw = draw_generic(aj, rng);
    try {
      ThetaPullback candidate(aj, draw.c);
      zeros = locate_zeros(candidate, cfg.tol.quad);
      tp.emplace(candidate);
    } catch (const ResampleRequired& e) {
      r.log.push_back(std::string("resampled: ") + e.what());
    }
  }
  if (!tp) throw NonGeneric("zeroset-plot: no generic shift");

  const int n = cfg.plot_resolution;
  std::vector<std::vector<double>> values(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n)));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    for (int i = 0; i < n; ++i) {
      const Complex z = spec.point((i + 0.5) / n, (j + 0.5) / n);
      values[j][static_cast<std::size_t>(i)] = std::log10(std::abs(tp->value(z)));
    }
  });

  std::vector<Marker> markers{{zeros[0], "zero"}, {zeros[1], "zero"},
                              {spec.p1(), "p1"}, {spec.p2(), "p2"}};
  for (const auto& m : markers) {
    std::vector<std::string> row{m.kind};
    push_complex(row, m.z);
    r.table.add(std::move(row));
  }
  const CPair c = tp->c();
  r.svg = heatmap_svg(spec, values, markers, "log10 |Theta(phi(z) - c)|");
  r.passed = true;
  r.log.push_back("c = (" + fmt(c.z.real()) + "," + fmt(c.z.imag()) + "; " + fmt(c.w.real()) +
                  "," + fmt(c.w.imag()) + "), zeros located: 2");
  return r;
}

SuiteResult run_suite(const std::string& command, const RunConfig& cfg) {
  if (command == "identities") return run_identities(cfg);
  if (command == "periods") return run_periods(cfg);
  if (command == "thm51") return run_thm51(cfg);
  if (command == "thm66") return run_thm66(cfg);
  if (command == "zeroset-plot") return run_zeroset_plot(cfg);
  throw std::invalid_argument("unknown command '" + command + "'");
}

void write_outputs(const SuiteResult& result, const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  result.table.write(cfg.out_dir / (result.name + ".csv"));
  if (!result.svg.empty()) {
    std::ofstream out(cfg.out_dir / (result.name + ".svg"), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write svg into " + cfg.out_dir.string());
    out << result.svg;
  }
}

}  // namespace nodal_theta::cli
