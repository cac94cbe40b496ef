// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sdp/farkas.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ncagm/errors.hpp"

namespace ncagm::sdp {

SdpProblem pinned_problem(const SdpProblem& problem, double lambda_target) {
  SdpProblem out;
  out.blocks = problem.blocks;
  out.info = problem.info;
  out.constraints.reserve(problem.constraints.size() + 1);
  out.constraints.push_back({problem.objective, lambda_target});
  out.constraints.insert(out.constraints.end(), problem.constraints.begin(), problem.constraints.end());
  return out;
}

double weighted_sum_max_eigenvalue(const SdpProblem& problem, const Eigen::VectorXd& y) {
  if (static_cast<std::size_t>(y.size()) != problem.constraints.size()) {
    throw ParameterError("multiplier vector does not match the number of constraints");
  }
  std::vector<Eigen::MatrixXd> blocks;
  for (const Block& b : problem.blocks) {
    blocks.push_back(b.kind == BlockKind::dense ? Eigen::MatrixXd::Zero(b.size, b.size) : Eigen::MatrixXd::Zero(b.size, 1));
  }
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    const double yk = y[static_cast<Eigen::Index>(k)];
    if (yk == 0.0) continue;
    for (const Entry& e : problem.constraints[k].matrix.entries()) {
      auto& b = blocks[static_cast<std::size_t>(e.block)];
      if (problem.blocks[static_cast<std::size_t>(e.block)].kind == BlockKind::diagonal) {
        b(e.row, 0) += yk * e.value;
      } else {
        b(e.row, e.col) += yk * e.value;
        if (e.row != e.col) b(e.col, e.row) += yk * e.value;
      }
    }
  }
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (problem.blocks[k].kind == BlockKind::diagonal) {
      top = std::max(top, blocks[k].maxCoeff());
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(blocks[k], Eigen::EigenvaluesOnly);
      top = std::max(top, eig.eigenvalues()(blocks[k].rows() - 1));
    }
  }
  return top;
}

double farkas_margin(const SdpProblem& problem, const Eigen::VectorXd& y) {
  double s = 0.0;
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) s += problem.constraints[k].rhs * y[static_cast<Eigen::Index>(k)];
  return s;
}

double farkas_scale(const SdpProblem& problem, const Eigen::VectorXd& y) {
  double amax = 0.0;
  for (const auto& c : problem.constraints) amax = std::max(amax, c.matrix.max_abs());
  return y.lpNorm<1>() * amax;
}

std::optional<FarkasCertificate> extract_farkas_pinned(const SdpProblem& pinned, double lambda_target,
                                                       const FarkasOptions& options) {
  const auto& cons = pinned.constraints;
  auto warn = [&](const std::string& msg) {
    if (options.solver.log) options.solver.log(msg);
  };

  // Rows with identical data (w and its reversal, for instance) share one
  // multiplier; the box on y then applies to the merged row.
  std::vector<std::size_t> unique;
  std::map<std::vector<Entry>, std::size_t> seen;
  for (std::size_t k = 0; k < cons.size(); ++k) {
    auto [it, inserted] = seen.try_emplace(cons[k].matrix.entries(), k);
    if (inserted) {
      unique.push_back(k);
      continue;
    }
    if (cons[k].rhs != cons[it->second].rhs) {
      // Same data, different right-hand sides: y = e_k - e_j is already a certificate.
      FarkasCertificate cert;
      cert.lambda_target = lambda_target;
      cert.y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cons.size()));
      const double s = cons[k].rhs > cons[it->second].rhs ? 1.0 : -1.0;
      cert.y[static_cast<Eigen::Index>(k)] = s;
      cert.y[static_cast<Eigen::Index>(it->second)] = -s;
      cert.margin = farkas_margin(pinned, cert.y);
      cert.psd_defect = weighted_sum_max_eigenvalue(pinned, cert.y);
      if (cert.margin > options.margin_threshold) return cert;
    }
  }

  const auto u = static_cast<int>(unique.size());
  SdpProblem aux;
  aux.blocks = pinned.blocks;
  const int box = static_cast<int>(aux.blocks.size());
  aux.blocks.push_back({2 * u, BlockKind::diagonal});
  for (int k = 0; k < 2 * u; ++k) aux.objective.add(box, k, k, 1.0);
  aux.objective.canonicalize();
  aux.constraints.reserve(unique.size());
  for (int k = 0; k < u; ++k) {
    const Constraint& src = cons[unique[static_cast<std::size_t>(k)]];
    std::vector<Entry> entries = src.matrix.entries();
    entries.push_back({box, 2 * k, 2 * k, 1.0});
    entries.push_back({box, 2 * k + 1, 2 * k + 1, -1.0});
    aux.constraints.push_back({SparseSymmetric(std::move(entries)), src.rhs});
  }

  const Solution sol = solve(aux, options.solver);
  if (sol.status != SolveStatus::optimal) {
    warn("certificate search ended with status " + std::string(to_string(sol.status)));
    return std::nullopt;
  }

  FarkasCertificate cert;
  cert.lambda_target = lambda_target;
  cert.y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cons.size()));
  for (int k = 0; k < u; ++k) cert.y[static_cast<Eigen::Index>(unique[static_cast<std::size_t>(k)])] = sol.dual[k];
  cert.margin = farkas_margin(pinned, cert.y);
  cert.psd_defect = weighted_sum_max_eigenvalue(pinned, cert.y);
  if (!(cert.margin > options.margin_threshold)) return std::nullopt;
  if (cert.psd_defect > options.defect_tolerance * farkas_scale(pinned, cert.y)) {
    warn("certificate rejected: PSD defect above tolerance");
    return std::nullopt;
  }
  return cert;
}

std::optional<FarkasCertificate> extract_farkas(const SdpProblem& problem, double lambda_target,
                                                const FarkasOptions& options) {
  return extract_farkas_pinned(pinned_problem(problem, lambda_target), lambda_target, options);
}

}  // namespace ncagm::sdp
