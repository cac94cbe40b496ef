// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncagm/certify/rational_matrix.hpp"
#include "ncagm/certify/sos.hpp"
#include "ncagm/errors.hpp"

using namespace ncagm;
using certify::RationalMatrix;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

RationalMatrix rows(std::initializer_list<std::initializer_list<Rational>> r) {
  std::vector<std::vector<Rational>> v;
  for (const auto& row : r) v.emplace_back(row);
  return RationalMatrix::from_rows(v);
}

}  // namespace

TEST(PsdExact, Examples) {
  for (std::size_t d = 0; d < 6; ++d) EXPECT_TRUE(certify::psd_check_exact(RationalMatrix::identity(d)));
  EXPECT_FALSE(certify::psd_check_exact(rows({{1, 2}, {2, 1}})));
  EXPECT_TRUE(certify::psd_check_exact(rows({{q(5, 4), q(-3, 4), q(1, 4)}, {q(-3, 4), q(1, 2), 0}, {q(1, 4), 0, q(1, 2)}})));
  // Singular PSD and zero-pivot cases.
  EXPECT_TRUE(certify::psd_check_exact(rows({{1, 1}, {1, 1}})));
  EXPECT_TRUE(certify::psd_check_exact(rows({{0, 0}, {0, 0}})));
  EXPECT_FALSE(certify::psd_check_exact(rows({{0, 1}, {1, 0}})));
  EXPECT_FALSE(certify::psd_check_exact(rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
  EXPECT_FALSE(certify::psd_check_exact(rows({{-1}})));
  // Tiny negative eigenvalue that no float check at 1e-10 resolves.
  const Rational eps(mpz_class(1), mpz_class("1000000000000000000"));
  EXPECT_FALSE(certify::psd_check_exact(rows({{1, 1}, {1, 1 - eps}})));
  EXPECT_THROW(rows({{1, 2}, {3, 1}}), ParameterError);
}

TEST(PsdExactProperty, AgreesWithFloatingEigenvalues) {
  testkit::Gen g(41);
  int decided = 0;
  int positive = 0;
  for (int t = 0; t < 1500; ++t) {
    const int dim = g.integer(1, 6);
    RationalMatrix m(static_cast<std::size_t>(dim));
    if (g.coin()) {
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), g.rational(5, 4));
      }
    } else {
      // G G^T / k, sometimes shifted, keeps entries in [-5, 5] and hits PSD often.
      const int rank = g.integer(1, dim);
      std::vector<std::vector<Rational>> f(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(rank)));
      for (auto& row : f) {
        for (auto& v : row) v = g.rational(1, 3);
      }
      const Rational shift = g.coin() ? Rational(0) : Rational(-g.integer(0, 3), 10);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
          Rational s = i == j ? shift : Rational(0);
          for (int k = 0; k < rank; ++k) s += f[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] / rank;
          m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), s);
        }
      }
    }
    const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.to_double(), Eigen::EigenvaluesOnly).eigenvalues()(0);
    const bool exact = certify::psd_check_exact(m);
    if (lo > 1e-10) {
      ASSERT_TRUE(exact) << "case " << t;
      ++decided;
      ++positive;
    } else if (lo < -1e-10) {
      ASSERT_FALSE(exact) << "case " << t;
      ++decided;
    }
  }
  EXPECT_GE(decided, 1000);
  EXPECT_GE(positive, 100);
}

TEST(SosM2, MatchesTheDisplayedTwoLetterCertificate) {
  const auto c = certify::build_m2_certificate(2);
  EXPECT_EQ(c.lambda, q(1, 2));
  ASSERT_EQ(c.gram_blocks.size(), 3u);
  EXPECT_EQ(c.gram_blocks[0], rows({{q(5, 4), q(-3, 4), q(1, 4)}, {q(-3, 4), q(1, 2), 0}, {q(1, 4), 0, q(1, 2)}}));
  EXPECT_EQ(c.gram_blocks[1], rows({{q(5, 4), q(1, 4), q(-3, 4)}, {q(1, 4), q(1, 2), 0}, {q(-3, 4), 0, q(1, 2)}}));
  EXPECT_EQ(c.gram_blocks[2], rows({{q(1, 4), q(-1, 4), q(-1, 4)}, {q(-1, 4), q(1, 2), 0}, {q(-1, 4), 0, q(1, 2)}}));
  EXPECT_TRUE(certify::verify_sos(c));
}

TEST(SosM2, ThreeLetterBlocksMatchTheDisplayUpToSymmetry) {
  // The displayed n = 3 matrices carry 1/2 in position (4,3) against 1/9 in
  // (3,4); the symmetric reading with 1/9 is the one that verifies.
  const auto c = certify::build_m2_certificate(3);
  EXPECT_EQ(c.gram_blocks[0], rows({{q(5, 2), -1, 0, 0},
                                    {-1, q(4, 9), q(1, 9), q(1, 9)},
                                    {0, q(1, 9), q(4, 9), q(1, 9)},
                                    {0, q(1, 9), q(1, 9), q(4, 9)}}));
  EXPECT_EQ(c.gram_blocks[3], rows({{q(1, 2), q(-1, 3), q(-1, 3), q(-1, 3)},
                                    {q(-1, 3), q(4, 9), q(1, 9), q(1, 9)},
                                    {q(-1, 3), q(1, 9), q(4, 9), q(1, 9)},
                                    {q(-1, 3), q(1, 9), q(1, 9), q(4, 9)}}));
  EXPECT_EQ(c.lambda, q(3, 2));
  EXPECT_TRUE(certify::verify_sos(c));
}

TEST(SosM2, FourLetterFirstRows) {
  const auto c = certify::build_m2_certificate(4);
  const std::vector<Rational> y1{q(15, 4), q(-9, 8), q(-1, 8), q(-1, 8), q(-1, 8)};
  const std::vector<Rational> y5{q(3, 4), q(-3, 8), q(-3, 8), q(-3, 8), q(-3, 8)};
  for (std::size_t j = 0; j < 5; ++j) {
    EXPECT_EQ(c.gram_blocks[0](0, j), y1[j]);
    EXPECT_EQ(c.gram_blocks[4](0, j), y5[j]);
  }
  EXPECT_EQ(c.gram_blocks[0](1, 1), q(3, 8));
  EXPECT_EQ(c.gram_blocks[0](2, 3), q(1, 8));
  EXPECT_EQ(c.lambda, 3);
}

TEST(SosM2, VerifiesForAllSmallN) {
  for (int n = 2; n <= 20; ++n) {
    const auto c = certify::build_m2_certificate(n);
    EXPECT_EQ(c.lambda, Rational(n * (n - 1)) / 4);
    EXPECT_TRUE(certify::verify_sos(c)) << "n=" << n;
  }
  EXPECT_EQ(certify::build_m2_certificate(7).lambda, q(21, 2));
  EXPECT_THROW(certify::build_m2_certificate(1), ParameterError);
}

TEST(SosM2, LoweringLambdaBreaksTheIdentity) {
  auto c = certify::build_m2_certificate(3);
  c.lambda = q(1, 4);
  EXPECT_FALSE(certify::verify_sos(c));
  const auto diff = certify::sos_expansion(c) - certify::sos_target(c);
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff.coefficient(poly::Word{}), q(3, 2) - q(1, 4));
}

TEST(SosM2, NonPsdBlockIsRejectedEvenIfTheIdentityHolds) {
  // Shifting t from the unit entry of Y_{n+1} (localizer n - sum X_i) into
  // the unit entries of Y_1..Y_n moves only the constant term, by t*n.
  auto c = certify::build_m2_certificate(2);
  const Rational t(-1);
  c.gram_blocks[2].set(0, 0, c.gram_blocks[2](0, 0) + t);
  for (std::size_t i = 0; i < 2; ++i) c.gram_blocks[i].set(0, 0, c.gram_blocks[i](0, 0) + t);
  c.lambda += t * 2;
  EXPECT_EQ(certify::sos_expansion(c), certify::sos_target(c));
  EXPECT_FALSE(certify::psd_check_exact(c.gram_blocks[2]));
  EXPECT_FALSE(certify::verify_sos(c));
}

TEST(SosM2, WrongSignIsRejected) {
  auto c = certify::build_m2_certificate(2);
  c.sign = sos::Sign::minus;
  EXPECT_FALSE(certify::verify_sos(c));
}

TEST(SosM2, ShapeErrors) {
  auto c = certify::build_m2_certificate(3);
  c.gram_blocks.pop_back();
  EXPECT_THROW(certify::verify_sos(c), ParameterError);
  auto d = certify::build_m2_certificate(3);
  d.gram_blocks[0] = RationalMatrix::identity(3);
  EXPECT_THROW(certify::verify_sos(d), ParameterError);
}
