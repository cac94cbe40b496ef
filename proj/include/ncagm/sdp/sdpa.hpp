// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "ncagm/sdp/problem.hpp"

/// SDPA sparse format (".dat-s").
///
/// The format states the dual pair  max tr(F0 Y) s.t. tr(Fk Y) = ck, Y >= 0,
/// so a problem  min tr(C Y) s.t. tr(Ak Y) = bk  is written with F0 = -C,
/// Fk = Ak and ck = bk. Diagonal blocks carry a negative size. ProblemInfo,
/// when present, travels in a leading comment line
///
///   "ncagm m=5 n=5 d=2 sign=1 reduced=0
namespace ncagm::sdp {

void export_sdpa(const SdpProblem& problem, std::ostream& out);
std::string export_sdpa(const SdpProblem& problem);

/// Throws ParseError (with the 1-based line) on malformed headers, indices
/// outside their block, lower-triangle entries and non-numeric tokens.
SdpProblem import_sdpa(std::istream& in);
SdpProblem import_sdpa(const std::string& text);

}  // namespace ncagm::sdp
