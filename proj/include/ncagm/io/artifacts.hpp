// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include "json.hpp"

#include <vector>

#include "ncagm/certify/sos.hpp"
#include "ncagm/sdp/farkas.hpp"
#include "ncagm/sdp/problem.hpp"
#include "ncagm/sdp/solver.hpp"

/// JSON artifacts. Every number is written as a decimal string: binary64
/// values in shortest round-trip form, rationals as "p/q". Matrices are
/// stored as their lower triangle in row-major order; diagonal blocks as
/// their diagonal. Shared keys:
///
///   {"m", "n", "sign", "lambda", "blocks": [[...]], "dual": [...]}
///
/// plus "block_sizes" (negative for diagonal blocks) and artifact-specific
/// extras such as "status", "gap", "margin" and "psd_defect".
namespace ncagm::io {

using Json = nlohmann::ordered_json;

Json solution_to_json(const sdp::Solution& solution, const sdp::ProblemInfo& info);

Json farkas_to_json(const sdp::FarkasCertificate& cert, const sdp::ProblemInfo& info);
/// Throws ParseError (line 0) on missing keys or malformed numbers.
sdp::FarkasCertificate farkas_from_json(const Json& j);
sdp::ProblemInfo info_from_json(const Json& j);

Json sos_to_json(const certify::SosCertificate& cert);
certify::SosCertificate sos_from_json(const Json& j);

struct Instance {
  int n = 0;
  int m = 0;
  std::vector<Eigen::MatrixXd> matrices;
};
/// {"n", "m", "matrices": [[row-major entries]]}; each matrix may also be
/// given as a list of rows. Entries may be numbers or decimal strings.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Reads a whole file; throws ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace ncagm::io
