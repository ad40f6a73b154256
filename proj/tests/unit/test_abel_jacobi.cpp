#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "nodal_theta/abel_jacobi.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/rng.hpp"

using namespace nodal_theta;
using nodal_theta::testing::config1;
using nodal_theta::testing::config2;
using nodal_theta::testing::dist_to_integer;

class AbelJacobiTest : public ::testing::TestWithParam<int> {
 protected:
  AbelJacobiTest() : aj_(GetParam() == 1 ? config1() : config2()) {}
  const NodalCurveSpec& spec() const { return aj_.spec(); }
  AbelJacobi aj_;
};

TEST_P(AbelJacobiTest, BasePointMapsToOrigin) {
  const CPair v = aj_.phi(spec().z0());
  EXPECT_EQ(v.z, Complex(0.0, 0.0));
  EXPECT_EQ(v.w, Complex(0.0, 0.0));
  EXPECT_LT(std::abs(aj_.phi1(spec().z0() + 0.25) - 0.25), 1e-15);
}

TEST_P(AbelJacobiTest, ClosedFormMatchesQuadrature) {
  SplitMix64 rng(101);
  const double keep = 2.0 * aj_.forbidden_radius();
  int checked = 0;
  while (checked < 50) {
    const Complex P = spec().point(rng.uniform(), rng.uniform());
    if (spec().lattice_distance(P, spec().p1()) < keep || spec().lattice_distance(P, spec().p2()) < keep) continue;
    const BranchedPath path = aj_.default_path(P);
    EXPECT_LT(std::abs(aj_.phi2(path) - aj_.phi2_quadrature(path, 1e-11)), 1e-9) << P;
    ++checked;
  }
}

TEST_P(AbelJacobiTest, HomotopicPathsAgree) {
  const Complex z0 = spec().z0();
  const Complex P = z0 + Complex(0.08, 0.22);
  const BranchedPath a{{z0, P}, std::nullopt};
  const BranchedPath b{{z0, z0 + Complex(0.12, 0.05), P}, std::nullopt};
  aj_.check_path(a);
  aj_.check_path(b);
  EXPECT_LT(std::abs(aj_.phi2(a) - aj_.phi2(b)), 1e-9);
}

TEST_P(AbelJacobiTest, LoopMonodromy) {
  const auto circle = [](Complex c, double r) {
    return [c, r](double x) { return c + r * std::polar(1.0, kTwoPi * x); };
  };
  const double d = spec().delta(), e = spec().eps();
  const Phi2Track around_p1 = aj_.track(circle(spec().p1(), d), aj_.phi2(spec().p1() + d));
  EXPECT_LT(std::abs(around_p1.at_end() - around_p1(0.0) - 1.0), 1e-8);
  const Phi2Track around_p2 = aj_.track(circle(spec().p2(), e), aj_.phi2(spec().p2() + e));
  EXPECT_LT(std::abs(around_p2.at_end() - around_p2(0.0) + 1.0), 1e-8);

  const Complex z0 = spec().z0();
  const Complex tau = spec().tau().value();
  const Phi2Track along_one = aj_.track([z0](double x) { return z0 + x; }, 0.0);
  EXPECT_LT(std::abs(along_one.at_end() - aj_.r1()), 1e-8);
  const Phi2Track along_tau = aj_.track([z0, tau](double x) { return z0 + x * tau; }, 0.0);
  EXPECT_LT(std::abs(along_tau.at_end() - aj_.r2()), 1e-8);
}

TEST_P(AbelJacobiTest, CutJumps) {
  const Complex tau = spec().tau().value();
  const Complex q0 = spec().q0();
  for (int i = 0; i < 20; ++i) {
    const double s = (i + 0.5) / 20.0;
    const Complex Pa = q0 + s;
    const CPair ja = aj_.phi(Pa + tau) - aj_.phi(Pa);
    EXPECT_LT(std::abs(ja.z - tau), 1e-8);
    EXPECT_LT(dist_to_integer(ja.w - aj_.r2()), 1e-8);
    const Complex Pb = q0 + 1.0 + s * tau;
    const CPair jb = aj_.phi(Pb - 1.0) - aj_.phi(Pb);
    EXPECT_LT(std::abs(jb.z + 1.0), 1e-8);
    EXPECT_LT(dist_to_integer(jb.w + aj_.r1()), 1e-8);
  }
}

TEST_P(AbelJacobiTest, ExponentialVanishesAtP1) {
  std::vector<double> ratio;
  for (int k = 2; k <= 6; ++k) {
    const double t = std::pow(10.0, -k);
    ratio.push_back(std::abs(aj_.e_phi2(spec().p1() + t)) / t);
  }
  for (double r : ratio) EXPECT_NEAR(r / ratio.back(), 1.0, 0.05);
  // e_phi2 agrees with e(phi2) of the continued value.
  const Complex P = spec().p1() + 0.1 * spec().delta();
  EXPECT_LT(std::abs(aj_.e_phi2(P) - std::exp(kTwoPiI * aj_.phi2(P))), 1e-12);
}

TEST_P(AbelJacobiTest, DivisorImage) {
  const std::vector<Complex> base{spec().z0(), spec().z0()};
  const CPair zero = aj_.divisor_image(base);
  EXPECT_EQ(zero.z, Complex(0.0, 0.0));
  EXPECT_EQ(zero.w, Complex(0.0, 0.0));
  const Complex A = spec().point(0.3, 0.2), B = spec().point(0.7, 0.8);
  const std::vector<Complex> ab{A, B}, ba{B, A};
  const CPair x = aj_.divisor_image(ab), y = aj_.divisor_image(ba);
  EXPECT_EQ(x.z, y.z);
  EXPECT_EQ(x.w, y.w);
  const CPair sum = aj_.phi(A) + aj_.phi(B);
  EXPECT_EQ(x.z, sum.z);
  EXPECT_EQ(x.w, sum.w);
}

TEST_P(AbelJacobiTest, PathChecks) {
  const Complex z0 = spec().z0();
  EXPECT_THROW(aj_.check_path({{z0, spec().p1()}, std::nullopt}), PoleProximity);
  EXPECT_THROW(aj_.check_path({{spec().p1() + 0.2}, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(aj_.phi(spec().p2()), PoleProximity);
  // Points inside a small disk are reached by a final radial leg.
  const Complex near = spec().p2() + 0.3 * aj_.forbidden_radius();
  EXPECT_NO_THROW(aj_.check_path(aj_.default_path(near)));
}

INSTANTIATE_TEST_SUITE_P(Configs, AbelJacobiTest, ::testing::Values(1, 2));
