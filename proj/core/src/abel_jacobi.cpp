#include "nodal_theta/abel_jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "nodal_theta/errors.hpp"
#include "nodal_theta/quadrature.hpp"

namespace nodal_theta {

namespace {

double segment_point_distance(Complex a, Complex b, Complex p) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double x = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(a + x * d - p);
}

// Interior detour points in (s, t) coordinates, tried in order.
constexpr std::array<std::array<double, 2>, 9> kDetours{{{0.5, 0.5},
                                                         {0.25, 0.25},
                                                         {0.75, 0.25},
                                                         {0.25, 0.75},
                                                         {0.75, 0.75},
                                                         {0.5, 0.1},
                                                         {0.5, 0.9},
                                                         {0.1, 0.5},
                                                         {0.9, 0.5}}};

}  // namespace

Phi2Track::Phi2Track(std::function<Complex(double)> curve,
                     std::function<Complex(Complex)> quotient, double kappa,
                     Complex phi2_start)
    : curve_(curve),
      log_([curve, quotient](double x) { return quotient(curve(x)); }),
      kappa_(kappa),
      z_start_(curve(0.0)),
      phi2_start_(phi2_start) {}

Complex Phi2Track::operator()(double x) const {
  const Complex dlog = log_(x) - log_(0.0);
  return phi2_start_ + dlog / kTwoPiI + kappa_ * (curve_(x) - z_start_);
}

AbelJacobi::AbelJacobi(const NodalCurveSpec& spec)
    : spec_(spec), eta_(spec), quotient_z0_(theta_quotient(spec.z0())) {}

double AbelJacobi::forbidden_radius() const {
  return 0.25 * std::min(spec_.delta(), spec_.eps());
}

Complex AbelJacobi::theta_quotient(Complex z) const {
  return eta_.theta11(z - spec_.p1()) / eta_.theta11(z - spec_.p2());
}

Complex AbelJacobi::e_phi2(Complex z) const {
  return theta_quotient(z) / quotient_z0_ * e_func(r1() * (z - spec_.z0()));
}

bool AbelJacobi::segment_clear(Complex a, Complex b, double radius) const {
  const Complex tau = spec_.tau().value();
  for (Complex pole : {spec_.p1(), spec_.p2()}) {
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        const Complex p = pole + static_cast<double>(m) + static_cast<double>(n) * tau;
        if (segment_point_distance(a, b, p) < radius) return false;
      }
    }
  }
  return true;
}

void AbelJacobi::check_path(const BranchedPath& path) const {
  const auto& v = path.vertices;
  if (v.empty()) throw std::invalid_argument("path has no vertices");
  if (std::abs(v.front() - spec_.z0()) > 1e-12) {
    throw std::invalid_argument("path must start at the base point");
  }
  const double r = forbidden_radius();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (segment_clear(v[i], v[i + 1], r)) continue;
    const bool last = i + 2 == v.size();
    if (last) {
      // A final radial leg may enter a disk; it must not pass the pole.
      const double end_dist = std::min(spec_.lattice_distance(v[i + 1], spec_.p1()),
                                       spec_.lattice_distance(v[i + 1], spec_.p2()));
      if (end_dist > 1e-12 && segment_clear(v[i], v[i + 1], end_dist * (1.0 - 1e-9))) {
        continue;
      }
    }
    throw PoleProximity("path passes too close to p1 or p2");
  }
}

BranchedPath AbelJacobi::default_path(Complex P) const {
  const Complex z0 = spec_.z0();
  const double r = forbidden_radius() * (1.0 - 1e-9);

  for (Complex pole : {spec_.p1(), spec_.p2()}) {
    const double dist = std::abs(P - pole);
    if (dist < forbidden_radius()) {
      if (dist < 1e-12) throw PoleProximity("point coincides with p1 or p2");
      // Just outside the disk, so the recursion and check_path see a clear leg.
      const Complex entry = pole + forbidden_radius() * (1.0 + 1e-9) * (P - pole) / dist;
      BranchedPath path = default_path(entry);
      path.vertices.push_back(P);
      return path;
    }
  }

  if (segment_clear(z0, P, r)) return {{z0, P}, std::nullopt};
  for (const auto& st : kDetours) {
    const Complex via = spec_.point(st[0], st[1]);
    if (segment_clear(z0, via, r) && segment_clear(via, P, r)) {
      return {{z0, via, P}, std::nullopt};
    }
  }
  for (const auto& a : kDetours) {
    for (const auto& b : kDetours) {
      const Complex va = spec_.point(a[0], a[1]);
      const Complex vb = spec_.point(b[0], b[1]);
      if (segment_clear(z0, va, r) && segment_clear(va, vb, r) &&
          segment_clear(vb, P, r)) {
        return {{z0, va, vb, P}, std::nullopt};
      }
    }
  }
  throw PoleProximity("no admissible default path to the requested point");
}

Complex AbelJacobi::phi2(const BranchedPath& path) const {
  check_path(path);
  const auto& v = path.vertices;
  Complex log_q = std::log(quotient_z0_);
  const Complex log_start = log_q;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Complex a = v[i];
    const Complex b = v[i + 1];
    ContinuousLog seg([&](double x) { return theta_quotient(a + x * (b - a)); },
                      log_q);
    log_q = seg.at_end();
  }
  return (log_q - log_start) / kTwoPiI + r1() * (path.end() - spec_.z0());
}

Complex AbelJacobi::phi2_quadrature(const BranchedPath& path, double quad_tol) const {
  check_path(path);
  return integrate_polyline([&](Complex z) { return eta_.eta_coeff(z); },
                            std::span<const Complex>(path.vertices), quad_tol);
}

AbelJacobiValue AbelJacobi::phi(const BranchedPath& path) const {
  return {phi1(path.end()), phi2(path)};
}

void AbelJacobi::continue_phi2(BranchedPath& path) const {
  path.branch_state = phi2(path);
}

Phi2Track AbelJacobi::track(std::function<Complex(double)> curve,
                            Complex phi2_start) const {
  return Phi2Track(std::move(curve),
                   [this](Complex z) { return theta_quotient(z); }, r1(),
                   phi2_start);
}

CPair AbelJacobi::divisor_image(std::span<const BranchedPath> points) const {
  CPair sum{};
  for (const auto& path : points) {
    sum += path.branch_state ? CPair{phi1(path.end()), *path.branch_state}
                             : phi(path);
  }
  return sum;
}

CPair AbelJacobi::divisor_image(std::span<const Complex> points) const {
  CPair sum{};
  for (Complex P : points) sum += phi(P);
  return sum;
}

}  // namespace nodal_theta
