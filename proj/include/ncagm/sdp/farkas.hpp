// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <optional>

#include "ncagm/sdp/problem.hpp"
#include "ncagm/sdp/solver.hpp"

namespace ncagm::sdp {

/// Multipliers proving that no Y >= 0 satisfies the pinned feasibility
/// problem: sum_i y_i A~_i <= 0 while b~^T y > 0.
struct FarkasCertificate {
  /// y[0] multiplies the pinned objective row, y[k] the k-th original constraint.
  Eigen::VectorXd y;
  double lambda_target = 0.0;
  /// b~^T y = lambda_target * y[0] + b^T y.
  double margin = 0.0;
  /// Largest eigenvalue of sum_i y_i A~_i.
  double psd_defect = 0.0;
};

/// The feasibility problem "tr(C Y) = lambda_target, tr(A_k Y) = b_k,
/// Y >= 0" as an SDP with zero objective. Row 0 is the pinned objective.
SdpProblem pinned_problem(const SdpProblem& problem, double lambda_target);

/// Largest eigenvalue of sum_i y_i A_i over all blocks.
double weighted_sum_max_eigenvalue(const SdpProblem& problem, const Eigen::VectorXd& y);

/// b^T y.
double farkas_margin(const SdpProblem& problem, const Eigen::VectorXd& y);

struct FarkasOptions {
  /// A certificate is returned only when its margin exceeds this value.
  double margin_threshold = 1e-6;
  /// Accepted psd_defect, relative to ||y||_1 * max_i ||A_i||_inf.
  double defect_tolerance = 1e-6;
  SolverOptions solver{};
};

/// Searches for a Farkas certificate for lambda_target. The multipliers are
/// normalized by |y_i| <= 1 (an LP block added to the dual), so the search
/// is itself a bounded SDP whose optimum is 0 exactly when lambda_target is
/// feasible. Returns nullopt when no certificate with the required margin
/// exists or the solver does not reach optimality.
std::optional<FarkasCertificate> extract_farkas(const SdpProblem& problem, double lambda_target,
                                                const FarkasOptions& options = {});

/// Runs extract_farkas on an already pinned feasibility problem.
std::optional<FarkasCertificate> extract_farkas_pinned(const SdpProblem& pinned, double lambda_target,
                                                       const FarkasOptions& options = {});

/// ||y||_1 * max_i ||A_i||_inf, the scale for psd_defect checks.
double farkas_scale(const SdpProblem& problem, const Eigen::VectorXd& y);

}  // namespace ncagm::sdp
