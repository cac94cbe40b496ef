// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncagm/sdp/farkas.hpp"
#include "ncagm/sdp/problem.hpp"

namespace ncagm::certify {

struct FarkasCheck {
  double margin = 0.0;
  double max_eigenvalue = 0.0;
  double scale = 0.0;
};

/// Re-checks a certificate against the pinned feasibility problem it is
/// indexed by: throws InvalidCertificate unless
/// lambda_max(sum_i y_i A_i) <= tolerance * ||y||_1 * max_i max|A_i|,
/// then returns the recomputed margin b^T y. The certificate proves
/// infeasibility iff the call returns and margin > 0.
FarkasCheck farkas_check(const sdp::SdpProblem& pinned, const sdp::FarkasCertificate& cert, double tolerance);

}  // namespace ncagm::certify
