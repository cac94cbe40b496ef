// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/certify/instance.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "ncagm/errors.hpp"
#include "ncagm/poly/polynomial.hpp"

namespace ncagm::certify {

namespace {

void accumulate(const std::vector<Eigen::MatrixXd>& a, int depth, const Eigen::MatrixXd& prefix,
                std::vector<bool>& used, Eigen::MatrixXd& out) {
  if (depth == 0) {
    out += prefix;
    return;
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    accumulate(a, depth - 1, prefix * a[j], used, out);
    used[j] = false;
  }
}

}  // namespace

Eigen::MatrixXd evaluate_distinct_product_sum(const std::vector<Eigen::MatrixXd>& a, int m) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || m < 1 || m > n) throw ParameterError("need 1 <= m <= n matrices");
  const Eigen::Index dim = a.front().rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<bool> used(a.size(), false);
  accumulate(a, m, Eigen::MatrixXd::Identity(dim, dim), used, out);
  return out;
}

InstanceReport eval_instance(const std::vector<Eigen::MatrixXd>& a, int m, double tolerance) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || m < 1 || m > n) throw ParameterError("need 1 <= m <= n matrices");
  if (!(tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  const Eigen::Index dim = a.front().rows();
  if (dim < 1) throw ParameterError("matrices must be non-empty");
  for (const auto& ai : a) {
    if (ai.rows() != dim || ai.cols() != dim) throw ParameterError("matrices must be square and of equal size");
    if ((ai - ai.transpose()).cwiseAbs().maxCoeff() > tolerance) throw ParameterError("matrix is not symmetric");
  }

  InstanceReport r;
  r.m = m;
  r.n = n;
  r.all_psd = true;
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& ai : a) {
    const Eigen::MatrixXd s = 0.5 * (ai + ai.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues()(0) < -tolerance) r.all_psd = false;
    total += s;
  }
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(total, Eigen::EigenvaluesOnly);
    r.sum_bounded = eig.eigenvalues()(dim - 1) <= n + tolerance;
  }

  const Eigen::MatrixXd p = evaluate_distinct_product_sum(a, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (p + p.transpose()), Eigen::EigenvaluesOnly);
  r.min_eig = eig.eigenvalues()(0);
  r.max_eig = eig.eigenvalues()(dim - 1);
  r.bound = static_cast<double>(poly::falling_factorial(n, m));

  auto add = [&](std::string name, bool lower, double limit) {
    BoundCheck c{std::move(name), lower ? r.min_eig : r.max_eig, limit, lower, false};
    c.violated = lower ? c.value < limit - tolerance : c.value > limit + tolerance;
    r.checks.push_back(c);
  };
  add("upper", false, r.bound);
  add("lower", true, -r.bound);
  if (m == 2) add("improved m=2", true, -0.25 * n * (n - 1));
  if (m == 3 && n >= 3) {
    add("improved m=3 (expectation-form constant)", true, -(n / (4.0 * (n - 2))) * r.bound);
  }
  if (r.feasible()) {
    for (const auto& c : r.checks) {
      if (c.violated) r.violations.push_back(c.name);
    }
  }
  return r;
}

std::vector<Eigen::MatrixXd> sharp_m2_instance() {
  Eigen::MatrixXd a1(2, 2);
  Eigen::MatrixXd a2(2, 2);
  const double r = std::sqrt(2.0) / 3.0;
  a1 << 1.5, 0.0, 0.0, 0.0;
  a2 << 1.0 / 6.0, r, r, 4.0 / 3.0;
  return {a1, a2};
}

}  // namespace ncagm::certify
