// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <vector>

#include "generators.hpp"
#include "ncagm/sdp/problem.hpp"

namespace ncagm::testkit {

/// min c^T x  s.t.  A x = b,  x >= 0, with full row rank A.
struct LinearProgram {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

/// Optimum by enumerating every basis: the LP is bounded and feasible by
/// construction, so some basic feasible solution is optimal.
inline std::optional<double> brute_force_optimum(const LinearProgram& lp) {
  const int rows = static_cast<int>(lp.a.rows());
  const int cols = static_cast<int>(lp.a.cols());
  std::optional<double> best;
  std::vector<int> pick(static_cast<std::size_t>(rows));
  auto visit = [&](auto&& self, int start, int depth) -> void {
    if (depth == rows) {
      Eigen::MatrixXd basis(rows, rows);
      for (int k = 0; k < rows; ++k) basis.col(k) = lp.a.col(pick[static_cast<std::size_t>(k)]);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
      if (lu.rank() < rows) return;
      const Eigen::VectorXd xb = lu.solve(lp.b);
      if (xb.minCoeff() < -1e-12) return;
      double obj = 0.0;
      for (int k = 0; k < rows; ++k) obj += lp.c[pick[static_cast<std::size_t>(k)]] * xb[k];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int j = start; j < cols; ++j) {
      pick[static_cast<std::size_t>(depth)] = j;
      self(self, j + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  return best;
}

/// Feasible (b = A x0, x0 > 0) and bounded (c = A^T y0 + s, s > 0) LP.
inline LinearProgram random_lp(Gen& g) {
  LinearProgram lp;
  const int cols = g.integer(2, 6);
  const int rows = g.integer(1, std::min(3, cols - 1));
  lp.a.resize(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) lp.a(i, j) = static_cast<double>(g.integer(-3, 3));
  }
  while (Eigen::FullPivLU<Eigen::MatrixXd>(lp.a).rank() < rows) lp.a(g.integer(0, rows - 1), g.integer(0, cols - 1)) += 1.0;
  Eigen::VectorXd x0(cols);
  Eigen::VectorXd s(cols);
  Eigen::VectorXd y0(rows);
  for (int j = 0; j < cols; ++j) {
    x0[j] = g.coin() ? 0.0 : g.real(0.1, 2.0);
    s[j] = g.real(0.05, 2.0);
  }
  for (int i = 0; i < rows; ++i) y0[i] = g.real(-1.0, 1.0);
  lp.b = lp.a * x0;
  lp.c = lp.a.transpose() * y0 + s;
  return lp;
}

/// The LP as a diagonal SDP: either one diagonal block or 1x1 dense blocks.
inline sdp::SdpProblem as_sdp(const LinearProgram& lp, bool one_by_one) {
  sdp::SdpProblem p;
  const int cols = static_cast<int>(lp.a.cols());
  if (one_by_one) {
    for (int j = 0; j < cols; ++j) p.blocks.push_back({1, sdp::BlockKind::dense});
  } else {
    p.blocks.push_back({cols, sdp::BlockKind::diagonal});
  }
  auto at = [&](sdp::SparseSymmetric& m, int j, double v) {
    if (one_by_one) m.add(j, 0, 0, v);
    else m.add(0, j, j, v);
  };
  for (int j = 0; j < cols; ++j) at(p.objective, j, lp.c[j]);
  p.objective.canonicalize();
  for (Eigen::Index i = 0; i < lp.a.rows(); ++i) {
    sdp::Constraint con;
    for (int j = 0; j < cols; ++j) at(con.matrix, j, lp.a(i, j));
    con.matrix.canonicalize();
    con.rhs = lp.b[i];
    p.constraints.push_back(std::move(con));
  }
  return p;
}

}  // namespace ncagm::testkit
