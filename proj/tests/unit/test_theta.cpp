#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/theta.hpp"

using namespace nodal_theta;
using nodal_theta::testing::naive_theta;

namespace {

const ModularParameter kSquare(Complex(0.0, 1.0));
const ModularParameter kOblique(Complex(0.3, 0.8));

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(EFunc, Values) {
  EXPECT_NEAR(std::abs(e_func(0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_func(0.5) + 1.0), 0.0, 1e-15);
  const Complex v = e_func(Complex(0.0, 1.0));
  EXPECT_NEAR(v.real(), std::exp(-2.0 * M_PI), 1e-17);
  EXPECT_NEAR(v.real(), 1.8674427317e-3, 1e-13);
  EXPECT_NEAR(v.imag(), 0.0, 1e-18);
}

TEST(EFunc, LargeRealPartReduced) {
  const Complex x(1e6 + 0.25, 0.1);
  EXPECT_LT(std::abs(e_func(x) - std::exp(Complex(0, 2 * M_PI) * Complex(0.25, 0.1))), 1e-14);
}

TEST(ModularParameter, RejectsLowerHalfPlane) {
  EXPECT_THROW(ModularParameter(Complex(0.3, 0.0)), std::invalid_argument);
  EXPECT_THROW(ModularParameter(Complex(0.3, -1.0)), std::invalid_argument);
  EXPECT_NO_THROW(ModularParameter(Complex(0.3, 0.01)));
}

TEST(SeriesPolicy, Validate) {
  EXPECT_THROW((SeriesPolicy{0.0, 10}.validate()), std::invalid_argument);
  EXPECT_THROW((SeriesPolicy{1.0, 10}.validate()), std::invalid_argument);
  EXPECT_THROW((SeriesPolicy{1e-14, 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((SeriesPolicy{1e-14, 1}.validate()));
}

TEST(ThetaChar, SquareLatticeAtOrigin) {
  // theta(0, i) = pi^(1/4) / Gamma(3/4).
  const double closed = std::pow(M_PI, 0.25) / std::tgamma(0.75);
  const Complex v = theta_char({}, 0.0, kSquare);
  EXPECT_NEAR(v.real(), 1.086434811213308, 1e-14);
  EXPECT_NEAR(v.real(), closed, 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(ThetaChar, MatchesDirectSummation) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& tau : {kSquare, kOblique}) {
    for (int i = 0; i < 40; ++i) {
      const double a = u(gen), b = u(gen);
      const Complex z(u(gen), 0.7 * u(gen));
      for (int order = 0; order <= 2; ++order) {
        const Complex lib = theta_char_derivative({a, b}, z, tau, {}, order);
        const Complex ref = naive_theta(a, b, z, tau.value(), order);
        EXPECT_LT(std::abs(lib - ref), 1e-13 * std::max(1.0, std::abs(ref)))
            << "order " << order << " z " << z;
      }
    }
  }
}

TEST(ThetaChar, PeriodicInZ) {
  for (const Complex z : {Complex(0.1, 0.2), Complex(-0.4, 0.5), Complex(0.7, -0.3)}) {
    EXPECT_LT(rel(theta_char({}, z + 1.0, kOblique), theta_char({}, z, kOblique)), 1e-14);
    EXPECT_LT(rel(theta_char_dz({}, z + 1.0, kOblique), theta_char_dz({}, z, kOblique)), 1e-13);
  }
}

TEST(ThetaChar, OddCharacteristicVanishesAtZero) {
  for (const auto& tau : {kSquare, kOblique, ModularParameter(Complex(-0.45, 0.6))}) {
    EXPECT_LT(std::abs(theta_char({0.5, 0.5}, 0.0, tau)), 1e-12);
  }
}

TEST(ThetaChar, NonConvergentWhenIndexBudgetTooSmall) {
  EXPECT_THROW(theta_char({}, 0.0, kSquare, {1e-14, 1}), NonConvergent);
  EXPECT_NO_THROW(theta_char({}, 0.0, kSquare, {1e-14, 8}));
}

TEST(ThetaCharDz, EvenFunctionHasZeroSlopeAtOrigin) {
  EXPECT_LT(std::abs(theta_char_dz({}, 0.0, kSquare)), 1e-15);
  EXPECT_LT(std::abs(theta_char_dz({}, 0.0, kOblique)), 1e-15);
}

TEST(ThetaCharDz, CentralDifference) {
  const double h = 1e-5;
  const Complex fd = (theta_char({0.5, 0.5}, h, kSquare) - theta_char({0.5, 0.5}, -h, kSquare)) / (2 * h);
  const Complex an = theta_char_dz({0.5, 0.5}, 0.0, kSquare);
  EXPECT_GT(std::abs(an), 1.0);
  EXPECT_LT(std::abs(fd - an), 1e-8);

  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Characteristic ch{u(gen), u(gen)};
    const Complex z(u(gen), 0.5 * u(gen));
    const Complex fd2 = (theta_char(ch, z + h, kOblique) - theta_char(ch, z - h, kOblique)) / (2 * h);
    EXPECT_LT(rel(fd2, theta_char_dz(ch, z, kOblique)), 1e-7);
  }
}

TEST(TranslationFactor, Generators) {
  const Complex z(0.3, 0.1);
  EXPECT_LT(std::abs(translation_factor({}, 1, 0, z, kSquare) - 1.0), 1e-15);
  const Complex expected = std::exp(Complex(0, 2 * M_PI) * (-0.5 * kSquare.value() - z));
  EXPECT_LT(rel(translation_factor({}, 0, 1, z, kSquare), expected), 1e-14);
}

TEST(TranslationFactor, QuasiPeriodicityOblique) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const Characteristic ch{u(gen), u(gen)};
    const Complex z(u(gen), 0.5 * u(gen));
    const Complex lhs = naive_theta(ch.a, ch.b, z + 2.0 - kOblique.value(), kOblique.value());
    const Complex rhs = translation_factor(ch, 2, -1, z, kOblique) * naive_theta(ch.a, ch.b, z, kOblique.value());
    EXPECT_LT(rel(lhs, rhs), 1e-10);
  }
}

TEST(TranslationFactor, AllShiftsUpToThree) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& tau : {kSquare, kOblique}) {
    for (int p = -3; p <= 3; ++p) {
      for (int q = -3; q <= 3; ++q) {
        const Characteristic ch{u(gen), u(gen)};
        const Complex z(u(gen), 0.5 * u(gen));
        const Complex lhs = theta_char(ch, z + static_cast<double>(p) + static_cast<double>(q) * tau.value(), tau);
        const Complex rhs = translation_factor(ch, p, q, z, tau) * theta_char(ch, z, tau);
        EXPECT_LT(rel(lhs, rhs), 1e-10) << p << "," << q;
      }
    }
  }
}

TEST(Rho0Factor, Values) {
  EXPECT_EQ(rho0_factor(LatticeGenerator::one, Complex(0.4, 0.3), kSquare), Complex(1.0, 0.0));
  const Complex at0 = rho0_factor(LatticeGenerator::tau, 0.0, kSquare);
  EXPECT_NEAR(at0.real(), std::exp(M_PI), 1e-10);
  for (const Complex z : {Complex(0.1, 0.2), Complex(-0.3, 0.4)}) {
    EXPECT_LT(rel(rho0_factor(LatticeGenerator::tau, z, kOblique),
                  translation_factor({}, 0, 1, z, kOblique)), 1e-15);
  }
}

TEST(Psi, CharacterLaw) {
  const double r1 = -0.17, r2 = 0.31;
  EXPECT_LT(std::abs(psi(0, 0, r1, r2) - 1.0), 1e-15);
  EXPECT_LT(std::abs(psi(1, 0, r1, r2) - e_func(r1)), 1e-15);
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      EXPECT_NEAR(std::abs(psi(p, q, r1, r2)), 1.0, 1e-15);
      EXPECT_LT(std::abs(psi(p + 2, q - 1, r1, r2) - psi(p, q, r1, r2) * psi(2, -1, r1, r2)), 1e-12);
    }
  }
}

TEST(BigTheta, Automorphy) {
  const double r1 = -0.2, r2 = 0.35;
  const Complex tau = kOblique.value();
  for (const Complex z : {Complex(0.1, 0.2), Complex(-0.35, -0.1), Complex(0.6, 0.4)}) {
    for (const Complex w : {Complex(0.2, 0.1), Complex(0.8, -0.3)}) {
      const Complex base = big_theta(z, w, kOblique, r1, r2);
      EXPECT_LT(rel(big_theta(z + 1.0, w + r1, kOblique, r1, r2), base), 1e-10);
      EXPECT_LT(rel(big_theta(z, w + 1.0, kOblique, r1, r2), base), 1e-13);
      EXPECT_LT(rel(big_theta(z + tau, w + r2, kOblique, r1, r2),
                    std::exp(Complex(0, 2 * M_PI) * (-0.5 * tau - z)) * base), 1e-10);
    }
  }
}

TEST(BigTheta, DefinitionAndDerivative) {
  const double r1 = -0.17, r2 = 0.31;
  const Complex z(0.2, -0.1), w(0.4, 0.2);
  const Complex ew = std::exp(Complex(0, 2 * M_PI) * w);
  const Complex ref = naive_theta(0, 0, z, kSquare.value()) + naive_theta(-r1, r2, z, kSquare.value()) * ew;
  EXPECT_LT(rel(big_theta(z, w, kSquare, r1, r2), ref), 1e-13);
  const Complex dref = naive_theta(0, 0, z, kSquare.value(), 1) + naive_theta(-r1, r2, z, kSquare.value(), 1) * ew;
  EXPECT_LT(rel(big_theta_dz(z, w, kSquare, r1, r2), dref), 1e-13);
}
