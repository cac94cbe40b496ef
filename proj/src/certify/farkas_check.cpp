// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/certify/farkas_check.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncagm/errors.hpp"
#include "ncagm/poly/scalar.hpp"

namespace ncagm::certify {

FarkasCheck farkas_check(const sdp::SdpProblem& pinned, const sdp::FarkasCertificate& cert, double tolerance) {
  const auto& cons = pinned.constraints;
  if (static_cast<std::size_t>(cert.y.size()) != cons.size()) {
    throw InvalidCertificate("certificate length " + std::to_string(cert.y.size()) + " does not match " +
                             std::to_string(cons.size()) + " constraints");
  }
  if (!cert.y.allFinite()) throw InvalidCertificate("certificate has non-finite entries");

  // Dense re-assembly in long double, independent of the sparse path used
  // during extraction.
  std::vector<Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>> s;
  for (const auto& b : pinned.blocks) s.emplace_back(Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(b.size, b.size));
  long double margin = 0.0L;
  double amax = 0.0;
  for (std::size_t k = 0; k < cons.size(); ++k) {
    const long double yk = cert.y[static_cast<Eigen::Index>(k)];
    margin += yk * static_cast<long double>(cons[k].rhs);
    for (const auto& e : cons[k].matrix.entries()) {
      amax = std::max(amax, std::abs(e.value));
      auto& blk = s[static_cast<std::size_t>(e.block)];
      blk(e.row, e.col) += yk * e.value;
      if (e.row != e.col) blk(e.col, e.row) += yk * e.value;
    }
  }

  FarkasCheck out;
  out.margin = static_cast<double>(margin);
  out.scale = cert.y.lpNorm<1>() * amax;
  out.max_eigenvalue = -std::numeric_limits<double>::infinity();
  for (const auto& blk : s) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>> eig(blk, Eigen::EigenvaluesOnly);
    out.max_eigenvalue = std::max(out.max_eigenvalue, static_cast<double>(eig.eigenvalues().maxCoeff()));
  }
  if (out.max_eigenvalue > tolerance * out.scale) {
    throw InvalidCertificate("sum of y_i A_i has eigenvalue " + format_double(out.max_eigenvalue) +
                             " above the allowed " + format_double(tolerance * out.scale));
  }
  return out;
}

}  // namespace ncagm::certify
