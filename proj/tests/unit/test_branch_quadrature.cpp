#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nodal_theta/branch.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/quadrature.hpp"
#include "nodal_theta/rng.hpp"

using namespace nodal_theta;

TEST(ContinuousLog, WindingAroundOrigin) {
  const ContinuousLog log([](double x) { return std::polar(2.0, 3.0 * kTwoPi * x); });
  EXPECT_NEAR(log.delta().imag(), 3.0 * kTwoPi, 1e-12);
  EXPECT_NEAR(log.delta().real(), 0.0, 1e-12);
  EXPECT_NEAR(log(0.5).imag() - log(0.0).imag(), 3.0 * kPi, 1e-12);
}

TEST(ContinuousLog, StartValueIsKept) {
  const Complex start(0.0, 10.0 * kTwoPi);
  const ContinuousLog log([](double x) { return Complex(1.0 + x, 0.0); }, start);
  EXPECT_NEAR(std::abs(log(0.0) - start), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(log.at_end() - (start + std::log(2.0))), 0.0, 1e-14);
}

TEST(ContinuousLog, HalfTurnCancellationIsRejected) {
  // f goes around the unit circle once; a single step from 0 to 1 would see
  // no argument change at all.
  const ContinuousLog log([](double x) { return std::polar(1.0, kTwoPi * x); });
  EXPECT_NEAR(log.delta().imag(), kTwoPi, 1e-12);
  EXPECT_GE(log.knot_count(), 9u);
}

TEST(ContinuousLog, ThrowsThroughZero) {
  EXPECT_THROW(ContinuousLog([](double x) { return Complex(x - 0.5, 0.0); }),
               BranchStepTooLarge);
}

TEST(Quadrature, Interval) {
  const Complex v = integrate_interval([](double x) { return std::exp(Complex(0.0, x)); }, 0.0, kPi, 1e-12);
  EXPECT_LT(std::abs(v - Complex(0.0, 2.0)), 1e-12);
}

TEST(Quadrature, CircleResidue) {
  const Complex v = integrate_circle([](Complex z) { return 1.0 / (z - 0.1); }, 0.0, 0.5, 1e-12);
  EXPECT_LT(std::abs(v - kTwoPiI), 1e-11);
}

TEST(Quadrature, PolylineIsPathIndependentForEntireIntegrand) {
  const auto f = [](Complex z) { return std::exp(z) * z; };
  const std::vector<Complex> a{0.0, Complex(1.0, 0.0), Complex(1.0, 1.0)};
  const std::vector<Complex> b{0.0, Complex(0.0, 1.0), Complex(1.0, 1.0)};
  const Complex exact = std::exp(Complex(1.0, 1.0)) * (Complex(1.0, 1.0) - 1.0) + 1.0;
  EXPECT_LT(std::abs(integrate_polyline(f, a, 1e-12) - exact), 1e-11);
  EXPECT_LT(std::abs(integrate_polyline(f, b, 1e-12) - exact), 1e-11);
}

TEST(Quadrature, FailsNearSingularity) {
  EXPECT_THROW(integrate_interval([](double x) { return Complex(1.0 / std::sqrt(std::abs(x - 0.3) + 1e-30), 0.0); },
                                  0.0, 1.0, 1e-12, 4),
               QuadratureFailure);
}

TEST(Quadrature, GaussMean) {
  EXPECT_NEAR(gauss_mean([](double x) { return Complex(x * x * x, 0.0); }).real(), 0.25, 1e-15);
}

TEST(SplitMix64, ReferenceSequence) {
  // Reference outputs for seed 1234567 of the published SplitMix64 algorithm.
  SplitMix64 rng(1234567);
  const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                                    9817491932198370423ULL};
  for (std::uint64_t e : expected) EXPECT_EQ(rng.next(), e);
}

TEST(SplitMix64, SplitIsDeterministicAndDistinct) {
  const SplitMix64 base(42);
  SplitMix64 a = base.split(3), b = base.split(3), c = base.split(4);
  const auto va = a.next();
  EXPECT_EQ(va, b.next());
  EXPECT_NE(va, c.next());
  SplitMix64 u(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(SampleShift, Ranges) {
  SplitMix64 rng(5);
  const Complex tau(0.3, 0.8);
  for (int i = 0; i < 200; ++i) {
    const CPair c = sample_shift(rng, tau);
    const double t = c.z.imag() / tau.imag();
    const double s = c.z.real() - t * tau.real();
    EXPECT_GE(s, -1e-15);
    EXPECT_LT(s, 1.0);
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 1.0);
    EXPECT_LE(std::abs(c.w.imag()), 0.25);
  }
}
