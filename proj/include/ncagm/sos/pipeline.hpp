// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncagm/sdp/solver.hpp"
#include "ncagm/sos/compiler.hpp"

namespace ncagm::sos {

struct LambdaResult {
  /// Solution in full-problem indexing; with symmetry on, primal blocks and
  /// multipliers are lifted from the reduced solve.
  sdp::Solution solution;
  bool reduced = false;
  double seconds = 0.0;

  bool optimal() const noexcept { return solution.status == sdp::SolveStatus::optimal; }
  double lambda() const noexcept { return solution.objective_primal; }
};

/// Compiles and solves the lambda-problem for (m, n, sign).
LambdaResult solve_lambda(int m, int n, Sign sign, bool symmetry, const sdp::SolverOptions& options = {});

struct TableRow {
  int m = 0;
  int n = 0;
  /// lambda_1: the upper bound (sign minus); lambda_2: the lower bound (sign plus).
  LambdaResult upper;
  LambdaResult lower;
  double bound = 0.0;
  /// "ok", "VIOLATION", or "error: <status>" when either solve failed.
  std::string verdict;
};

/// Solves both problems of one table row. A row is a violation iff
/// max(lambda_1, lambda_2) > bound + verdict_tolerance(options.tolerance, bound).
TableRow table_row(int m, int n, bool symmetry, const sdp::SolverOptions& options);

/// Absolute slack used for verdicts: 100 * tol * max(1, bound).
double verdict_tolerance(double solver_tolerance, double bound);

/// All (m, n) with 1 <= m <= n <= 4, followed by the n = 5 rows when heavy.
std::vector<std::pair<int, int>> default_rows(bool heavy);

}  // namespace ncagm::sos
