#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "nodal_theta/errors.hpp"
#include "nodal_theta/inversion_branches.hpp"
#include "nodal_theta/rng.hpp"

using namespace nodal_theta;
using nodal_theta::testing::config1;
using nodal_theta::testing::config2;
using nodal_theta::testing::dist_to_integer;

namespace {

constexpr double kQuad = 1e-10;

CPair generic_shift(const AbelJacobi& aj, SplitMix64& rng) {
  for (;;) {
    const CPair c = sample_shift(rng, aj.spec().tau().value());
    try {
      LaurentData ld{ThetaPullback(aj, c)};
      if (ld.zeros_in_disk(1.25 * aj.spec().eps()) == 0) return c;
    } catch (const ResampleRequired&) {
    }
  }
}

}  // namespace

TEST(SelectEpsilon, FirstCandidateAccepted) {
  const std::vector<double> candidates{0.05, 0.04, 0.03};
  const EpsilonSelection sel = select_epsilon(config1(), candidates, 42, kQuad);
  EXPECT_EQ(sel.eps, 0.05);
  ASSERT_EQ(sel.reports.size(), 1u);
  const auto& rep = sel.reports.front();
  EXPECT_TRUE(rep.accepted);
  EXPECT_LT(rep.max_integer_shift, 1e-10);
  EXPECT_GT(rep.min_rational_shift, 1e-4);
  EXPECT_GT(rep.min_determinant, 1e-6);
}

TEST(SelectEpsilon, NoValidCandidate) {
  const std::vector<double> none{};
  EXPECT_THROW(select_epsilon(config1(), none, 42, kQuad), NoValidEpsilon);
  const std::vector<double> too_large{0.3};
  EXPECT_THROW(select_epsilon(config1(), too_large, 42, kQuad), NoValidEpsilon);
}

class BranchInverseTest : public ::testing::TestWithParam<int> {
 protected:
  BranchInverseTest()
      : aj_(GetParam() == 1 ? config1() : config2()),
        kappa_(riemann_constants(aj_, KappaVariant::half_tau, kQuad)),
        inverse_(aj_, kappa_, kQuad) {}
  AbelJacobi aj_;
  RiemannConstants kappa_;
  BranchInverse inverse_;
};

TEST_P(BranchInverseTest, RoundTripAndSheets) {
  SplitMix64 rng(500 + GetParam());
  for (int i = 0; i < 10; ++i) {
    const CPair c = generic_shift(aj_, rng);
    const CPair u = inverse_.forward(c);
    NewtonTrace trace;
    const CPair c0 = inverse_.solve(u, 0, &trace);
    EXPECT_LT((inverse_.forward(c0) - u).norm(), 1e-9);
    EXPECT_LT(std::abs(c0.z - c.z), 1e-12);
    EXPECT_LT(dist_to_integer(c0.w - c.w), 1e-9);
    EXPECT_LE(trace.iterations, 4);
    if (!trace.step_sizes.empty()) EXPECT_LT(trace.step_sizes.back(), 1e-12);
    for (long k = -3; k <= 3; ++k) {
      const CPair ck = inverse_.solve(u, k);
      const CPair step = inverse_.solve(u, k + 1) - ck;
      EXPECT_LT((step - CPair{0.0, 1.0}).norm(), 1e-9);
      EXPECT_LT(std::abs((ck - c0).w - static_cast<double>(k)), 1e-9);
    }
  }
}

TEST_P(BranchInverseTest, ZeroSetResidualIsSheetIndependent) {
  const auto& spec = aj_.spec();
  const PeriodGroup pg = aj_.period_group();
  for (const Complex P : {spec.point(0.3, 0.2), spec.point(0.85, 0.85), spec.point(0.1, 0.6)}) {
    const BranchedPath path = aj_.default_path(P);
    const ZeroSetSample s0 = zero_set_residual(inverse_, P, path, 0);
    const ZeroSetSample s1 = zero_set_residual(inverse_, P, path, 1);
    EXPECT_NEAR(s0.residual, s1.residual, 1e-9);
    EXPECT_LT((s1.c - s0.c - CPair{0.0, 1.0}).norm(), 1e-9);
    EXPECT_TRUE(congruent_mod_gamma(s0.u, aj_.phi(path), pg, 1e-12));
    EXPECT_LT((inverse_.forward(s0.c) - s0.u_solved).norm(), 1e-9);
  }
}

TEST_P(BranchInverseTest, UncorrectedMapMissesCurveImage) {
  // Observed behaviour, pinned: Theta(phi(P) - beta_k(phi(P))) is of order one.
  const auto& spec = aj_.spec();
  const Complex P = spec.point(0.3, 0.2);
  const ZeroSetSample s = zero_set_residual(inverse_, P, aj_.default_path(P), 0);
  EXPECT_GT(s.residual, 1e-3);
}

TEST_P(BranchInverseTest, CorrectedInverse) {
  const auto& spec = aj_.spec();
  SplitMix64 rng(900 + GetParam());
  for (int i = 0; i < 5; ++i) {
    const Complex P = spec.point(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    if (spec.lattice_distance(P, spec.p1()) < 2 * spec.delta() ||
        spec.lattice_distance(P, spec.p2()) < 2 * spec.eps()) {
      continue;
    }
    const CPair u = aj_.phi(P);
    EXPECT_LT(corrected_zero_set_residual(aj_, kappa_, u), 1e-10);
    const CPair c0 = corrected_inverse(aj_, kappa_, u, 0);
    const CPair c2 = corrected_inverse(aj_, kappa_, u, 2);
    EXPECT_LT((c2 - c0 - CPair{0.0, 2.0}).norm(), 1e-12);
  }
  // u - corrected_inverse(u) has constant z-part and a w-part that depends on
  // c1 only through a factor that cancels, so Theta vanishes off the curve too.
  const CPair off = aj_.phi(spec.point(0.3, 0.2)) + CPair{Complex(0.11, 0.07), Complex(0.3, 0.2)};
  EXPECT_LT(corrected_zero_set_residual(aj_, kappa_, off), 1e-10);
}

TEST_P(BranchInverseTest, RejectsMismatchedConstants) {
  const AbelJacobi other(aj_.spec().with_eps(0.03));
  EXPECT_THROW(BranchInverse(other, kappa_, kQuad), std::invalid_argument);
}

INSTANTIATE_TEST_SUITE_P(Configs, BranchInverseTest, ::testing::Values(1, 2));
