// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncagm/sdp/problem.hpp"

namespace ncagm::sdp {

enum class SolveStatus { optimal, infeasible, unbounded, max_iterations, numerical_failure };

std::string_view to_string(SolveStatus status) noexcept;

struct SolverOptions {
  /// Bound on the relative duality gap and on both relative residuals.
  double tolerance = 1e-8;
  int max_iterations = 200;
  /// Fraction of the distance to the PSD boundary taken per step.
  double step_fraction = 0.95;
  /// Pivot threshold, relative to the largest pivot, below which a
  /// constraint is declared linearly dependent and dropped.
  double dependency_tolerance = 1e-12;
  /// Use the OpenMP kernels; the serial references produce identical output.
  bool parallel = true;
  /// Optional sink for warnings and, when `verbose`, an iteration trace.
  std::function<void(const std::string&)> log;
  bool verbose = false;
};

/// Primal-dual pair of a solved SDP. Dense blocks are stored as square
/// matrices, diagonal blocks as column vectors.
struct Solution {
  SolveStatus status = SolveStatus::numerical_failure;
  std::vector<Eigen::MatrixXd> primal_blocks;
  std::vector<Eigen::MatrixXd> dual_slack;
  /// One multiplier per constraint of the input problem; dropped
  /// (dependent) constraints get zero.
  Eigen::VectorXd dual;
  double objective_primal = 0.0;
  double objective_dual = 0.0;
  /// |primal - dual| / (1 + |primal| + |dual|).
  double gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  /// Input constraint indices removed as linearly dependent.
  std::vector<int> dropped_constraints;
};

/// Primal-dual path-following interior-point method (HKM direction,
/// Mehrotra predictor-corrector) for
///
///   min tr(C X)  s.t.  tr(A_k X) = b_k,  X >= 0
///   max b^T y    s.t.  C - sum_k y_k A_k = Z >= 0.
///
/// Failures are reported through Solution::status, never thrown; malformed
/// input (entries outside blocks) throws ParameterError.
Solution solve(const SdpProblem& problem, const SolverOptions& options = {});

}  // namespace ncagm::sdp
