// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sos/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "ncagm/poly/polynomial.hpp"
#include "ncagm/sos/symmetry.hpp"

namespace ncagm::sos {

LambdaResult solve_lambda(int m, int n, Sign sign, bool symmetry, const sdp::SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const sdp::SdpProblem full = assemble_sdp(m, n, sign);
  LambdaResult out;
  if (symmetry) {
    const SymmetryReduction red = symmetry_reduce(full);
    sdp::Solution s = sdp::solve(red.reduced, options);
    if (s.primal_blocks.size() == 3) s.primal_blocks = red.lift_primal(s.primal_blocks);
    if (s.dual.size() == static_cast<Eigen::Index>(red.constraint_classes.size())) s.dual = red.lift_dual(s.dual);
    // Slacks and dropped rows refer to the reduced problem; not lifted.
    s.dual_slack.clear();
    s.dropped_constraints.clear();
    out.solution = std::move(s);
    out.reduced = true;
  } else {
    out.solution = sdp::solve(full, options);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double verdict_tolerance(double solver_tolerance, double bound) {
  return 100.0 * solver_tolerance * std::max(1.0, bound);
}

TableRow table_row(int m, int n, bool symmetry, const sdp::SolverOptions& options) {
  TableRow row;
  row.m = m;
  row.n = n;
  row.bound = static_cast<double>(poly::falling_factorial(n, m));
  row.upper = solve_lambda(m, n, Sign::minus, symmetry, options);
  row.lower = solve_lambda(m, n, Sign::plus, symmetry, options);
  if (!row.upper.optimal()) {
    row.verdict = "error: " + std::string(sdp::to_string(row.upper.solution.status));
  } else if (!row.lower.optimal()) {
    row.verdict = "error: " + std::string(sdp::to_string(row.lower.solution.status));
  } else {
    row.verdict = std::max(row.upper.lambda(), row.lower.lambda()) > row.bound + verdict_tolerance(options.tolerance, row.bound) ? "VIOLATION" : "ok";
  }
  return row;
}

std::vector<std::pair<int, int>> default_rows(bool heavy) {
  std::vector<std::pair<int, int>> rows;
  for (int n = 1; n <= (heavy ? 5 : 4); ++n) {
    for (int m = 1; m <= n; ++m) rows.emplace_back(m, n);
  }
  return rows;
}

}  // namespace ncagm::sos
