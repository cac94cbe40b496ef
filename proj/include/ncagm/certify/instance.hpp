// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace ncagm::certify {

/// One bound of the form  -c I <= sum <= ...  or  sum <= c I.
struct BoundCheck {
  std::string name;
  /// The eigenvalue compared: min_eig for lower bounds, max_eig for upper.
  double value = 0.0;
  /// Signed limit: min_eig >= limit or max_eig <= limit.
  double limit = 0.0;
  bool lower = false;
  bool violated = false;
};

struct InstanceReport {
  int m = 0;
  int n = 0;
  /// Every A_i >= -tol I.
  bool all_psd = false;
  /// sum_i A_i <= (n + tol) I.
  bool sum_bounded = false;
  bool feasible() const noexcept { return all_psd && sum_bounded; }
  /// Extreme eigenvalues of the symmetrized distinct-product sum.
  double min_eig = 0.0;
  double max_eig = 0.0;
  /// n!/(n-m)!.
  double bound = 0.0;
  std::vector<BoundCheck> checks;
  /// Names of the violated checks; only filled for feasible instances.
  std::vector<std::string> violations;
};

/// Sum over distinct (j_1..j_m) of A_{j_1} ... A_{j_m}, unsymmetrized.
Eigen::MatrixXd evaluate_distinct_product_sum(const std::vector<Eigen::MatrixXd>& a, int m);

/// Evaluates the inequalities on an explicit tuple. Throws ParameterError
/// if the matrices are not square, of equal size and symmetric within tol.
InstanceReport eval_instance(const std::vector<Eigen::MatrixXd>& a, int m, double tolerance = 1e-9);

/// The 2x2 pair on which the improved m = 2 lower bound is attained.
std::vector<Eigen::MatrixXd> sharp_m2_instance();

}  // namespace ncagm::certify
