// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "ncagm/certify/instance.hpp"
#include "ncagm/certify/sos.hpp"
#include "ncagm/errors.hpp"

using namespace ncagm;

namespace {

double spectral_norm(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .cwiseAbs()
      .maxCoeff();
}

// m! * e_m(a) by the elementary symmetric recurrence.
double distinct_sum_scalar(const std::vector<double>& a, int m) {
  std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
  e[0] = 1.0;
  for (double x : a) {
    for (int k = m; k >= 1; --k) e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
  }
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= k;
  return f * e[static_cast<std::size_t>(m)];
}

}  // namespace

TEST(Instance, IdentityTupleAttainsTheUpperBound) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      const std::vector<Eigen::MatrixXd> a(static_cast<std::size_t>(n), Eigen::MatrixXd::Identity(3, 3));
      const auto r = certify::eval_instance(a, m);
      EXPECT_TRUE(r.feasible());
      EXPECT_EQ(r.max_eig, r.bound);
      EXPECT_EQ(r.min_eig, r.bound);
      EXPECT_TRUE(r.violations.empty());
    }
  }
}

TEST(Instance, SharpPair) {
  const auto r = certify::eval_instance(certify::sharp_m2_instance(), 2);
  EXPECT_TRUE(r.feasible());
  EXPECT_NEAR(r.min_eig, -0.5, 1e-9);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks[2].name, "improved m=2");
  EXPECT_EQ(r.checks[2].limit, -0.5);
  const auto a = certify::sharp_m2_instance();
  EXPECT_NEAR(spectral_norm(a[0] + a[1]), 2.0, 1e-12);
}

TEST(Instance, ReportsViolationsOfFeasibleInputs) {
  // Scaled-up identity would violate the upper bound but is infeasible;
  // violations are only listed for feasible tuples.
  const std::vector<Eigen::MatrixXd> big(2, 2.0 * Eigen::MatrixXd::Identity(2, 2));
  const auto r = certify::eval_instance(big, 2);
  EXPECT_FALSE(r.sum_bounded);
  EXPECT_TRUE(r.checks[0].violated);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Instance, ThreeLetterChecksUseTheExpectationConstant) {
  const std::vector<Eigen::MatrixXd> a(4, Eigen::MatrixXd::Identity(2, 2));
  const auto r = certify::eval_instance(a, 3);
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks[2].name, "improved m=3 (expectation-form constant)");
  EXPECT_DOUBLE_EQ(r.checks[2].limit, -(4.0 / 8.0) * 24.0);
}

TEST(Instance, Errors) {
  std::vector<Eigen::MatrixXd> a{Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(3, 3)};
  EXPECT_THROW(certify::eval_instance(a, 2), ParameterError);
  std::vector<Eigen::MatrixXd> b{Eigen::MatrixXd::Identity(2, 2)};
  EXPECT_THROW(certify::eval_instance(b, 2), ParameterError);
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 1, 0, 1;
  EXPECT_THROW(certify::eval_instance({asym}, 1), ParameterError);
}

TEST(InstanceProperty, ProvenBoundsHoldOnRandomTuples) {
  testkit::Gen g(51);
  for (auto [m, n] : {std::pair{2, 4}, {3, 4}}) {
    for (int t = 0; t < 100; ++t) {
      const auto a = g.feasible_tuple(n, g.integer(1, 5));
      const auto r = certify::eval_instance(a, m);
      ASSERT_TRUE(r.feasible());
      ASSERT_TRUE(r.violations.empty()) << "m=" << m << " case " << t << " min " << r.min_eig << " max " << r.max_eig;
    }
  }
}

TEST(InstanceProperty, VerifiedSosCertificateDominatesNumerics) {
  testkit::Gen g(52);
  for (int t = 0; t < 1000; ++t) {
    const int n = g.integer(2, 5);
    const auto cert = certify::build_m2_certificate(n);
    const double lambda = cert.lambda.get_d();
    const auto a = g.feasible_tuple(n, g.integer(1, 4));
    const auto r = certify::eval_instance(a, 2);
    ASSERT_TRUE(r.feasible());
    // lambda + sum >= 0, i.e. sign * sum <= lambda with sign = -1 reading.
    ASSERT_GE(r.min_eig, -lambda - 1e-8 * lambda) << "case " << t;
  }
}

TEST(InstanceProperty, ScalarInputsFollowMaclaurin) {
  testkit::Gen g(53);
  for (int t = 0; t < 1000; ++t) {
    const int n = g.integer(1, 6);
    const int m = g.integer(1, n);
    std::vector<double> a(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& x : a) total += (x = g.real(0.0, 1.0));
    const double s = g.real(0.0, 1.0) * n / total;
    std::vector<Eigen::MatrixXd> mats;
    for (double& x : a) {
      x *= s;
      mats.push_back(Eigen::MatrixXd::Constant(1, 1, x));
    }
    const auto r = certify::eval_instance(mats, m);
    ASSERT_TRUE(r.feasible());
    const double expect = distinct_sum_scalar(a, m);
    ASSERT_NEAR(r.max_eig, expect, 1e-9 * (1.0 + expect));
    ASSERT_LE(r.max_eig, r.bound + 1e-9);
    ASSERT_GE(r.min_eig, 0.0);
    ASSERT_TRUE(r.violations.empty());
  }
}

TEST(NormProperty, AnticommutatorIsDominated) {
  testkit::Gen g(54);
  for (int t = 0; t < 1000; ++t) {
    const int dim = g.integer(1, 6);
    const Eigen::MatrixXd a = g.symmetric(dim, 2.0);
    const Eigen::MatrixXd b = g.symmetric(dim, 2.0);
    ASSERT_LE(spectral_norm(a * b + b * a), spectral_norm(a * a + b * b) + 1e-9);
  }
}

TEST(NormProperty, AnticommutatorAgainstSquaredSumForPsdPairs) {
  // The second inequality needs positive semidefinite inputs: A = -B makes
  // the right side vanish.
  testkit::Gen g(55);
  for (int t = 0; t < 1000; ++t) {
    const int dim = g.integer(1, 6);
    const Eigen::MatrixXd a = g.psd(dim);
    const Eigen::MatrixXd b = g.psd(dim);
    ASSERT_LE(2.0 * spectral_norm(a * b + b * a), spectral_norm((a + b) * (a + b)) + 1e-9);
  }
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_GT(2.0 * spectral_norm(-2.0 * a * a), spectral_norm((a - a) * (a - a)));
}
