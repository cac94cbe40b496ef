// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ncagm/poly/permutation.hpp"
#include "ncagm/poly/polynomial.hpp"
#include "ncagm/poly/scalar.hpp"
#include "ncagm/poly/word.hpp"
#include "ncagm/sdp/problem.hpp"

namespace ncagm::testkit {

// Hand-rolled generators over a seeded engine; every suite fixes its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  poly::Word word(int n, int max_degree) {
    std::vector<int> letters(static_cast<std::size_t>(integer(0, max_degree)));
    for (int& l : letters) l = integer(1, n);
    return poly::Word(std::move(letters));
  }

  Rational rational(int range = 5, int max_den = 6) {
    Rational q(integer(-range * max_den, range * max_den), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  poly::Polynomial<Rational> polynomial(int n, int terms, int max_degree) {
    poly::Polynomial<Rational> p(n);
    for (int k = 0; k < terms; ++k) p.add_term(word(n, max_degree), rational());
    return p;
  }

  poly::Permutation permutation(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng_);
    return poly::Permutation(std::move(images));
  }

  Eigen::MatrixXd symmetric(int dim, double scale = 1.0) {
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = real(-scale, scale);
    }
    return a;
  }

  /// G G^T with a random rank in 1..dim.
  Eigen::MatrixXd psd(int dim) {
    const int rank = integer(1, dim);
    Eigen::MatrixXd g(dim, rank);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < rank; ++j) g(i, j) = real(-1.0, 1.0);
    }
    return g * g.transpose();
  }

  /// n PSD matrices rescaled so that their sum has largest eigenvalue
  /// in (0, n].
  std::vector<Eigen::MatrixXd> feasible_tuple(int n, int dim) {
    std::vector<Eigen::MatrixXd> a;
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
      a.push_back(psd(dim));
      total += a.back();
    }
    const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(total, Eigen::EigenvaluesOnly).eigenvalues()(dim - 1);
    const double s = real(0.2, 1.0) * n / top;
    for (auto& ai : a) ai *= s;
    return a;
  }

  /// A canonical random SDP problem, values drawn at full binary64 precision.
  sdp::SdpProblem sdp_problem() {
    sdp::SdpProblem p;
    const int nb = integer(1, 4);
    for (int b = 0; b < nb; ++b) {
      p.blocks.push_back({integer(1, 5), coin() ? sdp::BlockKind::dense : sdp::BlockKind::diagonal});
    }
    auto fill = [&](sdp::SparseSymmetric& mat) {
      const int count = integer(0, 6);
      for (int k = 0; k < count; ++k) {
        const int b = integer(0, nb - 1);
        const auto& blk = p.blocks[static_cast<std::size_t>(b)];
        const int i = integer(0, blk.size - 1);
        const int j = blk.kind == sdp::BlockKind::diagonal ? i : integer(0, blk.size - 1);
        mat.add(b, i, j, value());
      }
      mat.canonicalize();
    };
    fill(p.objective);
    p.constraints.resize(static_cast<std::size_t>(integer(0, 6)));
    for (auto& c : p.constraints) {
      fill(c.matrix);
      c.rhs = value();
    }
    if (coin()) p.info = sdp::ProblemInfo{integer(1, 5), integer(1, 5), integer(0, 2), coin() ? 1 : -1, coin()};
    return p;
  }

  double value() {
    switch (integer(0, 3)) {
      case 0: return static_cast<double>(integer(-9, 9));
      case 1: return real(-1.0, 1.0) * 1e-7;
      case 2: return real(-1e6, 1e6);
      default: return real(-1.0, 1.0);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ncagm::testkit
