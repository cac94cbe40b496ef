// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ncagm/certify/farkas_check.hpp"
#include "ncagm/errors.hpp"
#include "ncagm/sdp/farkas.hpp"
#include "ncagm/sos/compiler.hpp"
#include "ncagm/sos/symmetry.hpp"

using namespace ncagm;

TEST(Farkas, PinnedProblemPutsTheObjectiveFirst) {
  const auto p = sos::assemble_sdp(2, 2, sos::Sign::plus);
  const auto pinned = sdp::pinned_problem(p, 0.4);
  ASSERT_EQ(pinned.num_constraints(), p.num_constraints() + 1);
  EXPECT_EQ(pinned.constraints[0].matrix, p.objective);
  EXPECT_EQ(pinned.constraints[0].rhs, 0.4);
  EXPECT_TRUE(pinned.objective.empty());
}

TEST(Farkas, BelowTheOptimumHasACertificate) {
  const auto p = sos::assemble_sdp(2, 2, sos::Sign::plus);
  const auto cert = sdp::extract_farkas(p, 0.4);
  ASSERT_TRUE(cert.has_value());
  EXPECT_GT(cert->margin, 1e-6);
  const auto pinned = sdp::pinned_problem(p, 0.4);
  const auto check = certify::farkas_check(pinned, *cert, 1e-6);
  EXPECT_GT(check.margin, 0.0);
  EXPECT_NEAR(check.margin, cert->margin, 1e-12);
}

TEST(Farkas, FeasibleTargetsHaveNone) {
  const auto p = sos::assemble_sdp(2, 2, sos::Sign::plus);
  EXPECT_FALSE(sdp::extract_farkas(p, 2.0).has_value());
  EXPECT_FALSE(sdp::extract_farkas(p, 0.5001).has_value());
}

TEST(Farkas, ZeroMultipliersAreNotACertificate) {
  const auto p = sos::assemble_sdp(2, 2, sos::Sign::plus);
  const auto pinned = sdp::pinned_problem(p, 0.4);
  sdp::FarkasCertificate zero;
  zero.y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(pinned.num_constraints()));
  const auto check = certify::farkas_check(pinned, zero, 1e-6);
  EXPECT_EQ(check.margin, 0.0);
  EXPECT_EQ(check.max_eigenvalue, 0.0);
}

TEST(Farkas, FlippingTheLargestMultiplierBreaksTheCertificate) {
  const auto p = sos::assemble_sdp(3, 3, sos::Sign::plus);
  const auto pinned = sdp::pinned_problem(p, 3.3);
  auto cert = sdp::extract_farkas(p, 3.3);
  ASSERT_TRUE(cert.has_value());
  Eigen::Index i = 0;
  cert->y.cwiseAbs().maxCoeff(&i);
  cert->y[i] = -cert->y[i];
  bool rejected = false;
  try {
    rejected = certify::farkas_check(pinned, *cert, 1e-6).margin <= 0.0;
  } catch (const InvalidCertificate&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

TEST(Farkas, WrongLengthIsInvalid) {
  const auto pinned = sdp::pinned_problem(sos::assemble_sdp(2, 2, sos::Sign::plus), 0.4);
  sdp::FarkasCertificate c;
  c.y = Eigen::VectorXd::Zero(3);
  EXPECT_THROW(certify::farkas_check(pinned, c, 1e-6), InvalidCertificate);
}

TEST(Farkas, SymmetricExtractionLiftsToTheFullProblem) {
  for (auto [m, n, lam] : {std::tuple{2, 3, 1.4}, {3, 3, 3.3}, {3, 4, 8.4}}) {
    const auto p = sos::assemble_sdp(m, n, sos::Sign::plus);
    const auto cert = sos::extract_farkas_symmetric(p, lam);
    ASSERT_TRUE(cert.has_value()) << m << "," << n;
    const auto pinned = sdp::pinned_problem(p, lam);
    ASSERT_EQ(cert->y.size(), static_cast<Eigen::Index>(pinned.num_constraints()));
    EXPECT_GT(certify::farkas_check(pinned, *cert, 1e-6).margin, 0.0);
  }
  EXPECT_FALSE(sos::extract_farkas_symmetric(sos::assemble_sdp(3, 3, sos::Sign::plus), 3.42).has_value());
}

TEST(Farkas, DuplicateRowsWithDifferentRightHandSides) {
  // tr(Y) = 1 and tr(Y) = 2 together: y = (1, -1) up to orientation.
  sdp::SdpProblem p;
  p.blocks = {{2, sdp::BlockKind::dense}};
  p.objective.add(0, 0, 0, 1.0);
  sdp::Constraint a;
  a.matrix = sdp::SparseSymmetric({{0, 0, 0, 1.0}, {0, 1, 1, 1.0}});
  a.rhs = 1.0;
  auto b = a;
  b.rhs = 2.0;
  p.constraints = {a, b};
  const auto cert = sdp::extract_farkas(p, 0.0);
  ASSERT_TRUE(cert.has_value());
  EXPECT_GT(certify::farkas_check(sdp::pinned_problem(p, 0.0), *cert, 1e-6).margin, 0.0);
}
