// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ncagm/certify/rational_matrix.hpp"
#include "ncagm/poly/polynomial.hpp"
#include "ncagm/sos/compiler.hpp"

namespace ncagm::certify {

/// lambda + sign * sum_{distinct} X_{j1}...X_{jm} written as
/// sum_i tr(beta l_i beta^T Y_i), with beta the monomial basis of degree
/// floor(m/2) and l_1..l_{n+1} the localizing polynomials.
struct SosCertificate {
  int m = 0;
  int n = 0;
  sos::Sign sign = sos::Sign::plus;
  Rational lambda;
  std::vector<RationalMatrix> gram_blocks;
};

/// sum_i sum_{a,b} localizing_entry(i,a,b) * Y_i[a,b], computed exactly.
/// Throws ParameterError on a block count or dimension mismatch.
poly::Polynomial<Rational> sos_expansion(const SosCertificate& cert);

/// lambda + sign * distinct_product_sum(m, n).
poly::Polynomial<Rational> sos_target(const SosCertificate& cert);

/// True iff every Gram block is PSD and the expansion equals the target,
/// both decided exactly.
bool verify_sos(const SosCertificate& cert);

/// Closed-form certificate for m = 2, lambda = n(n-1)/4.
SosCertificate build_m2_certificate(int n);

}  // namespace ncagm::certify
