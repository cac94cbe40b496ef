// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "ncagm/errors.hpp"
#include "ncagm/poly/polynomial.hpp"
#include "ncagm/sdp/problem.hpp"
#include "ncagm/sos/basis.hpp"

namespace ncagm::sos {

/// +1 selects lambda + sum (the lower Loewner bound, lambda_2);
/// -1 selects lambda - sum (the upper Loewner bound, lambda_1).
enum class Sign : int { minus = -1, plus = 1 };

/// Degree of the Gram basis used for target degree m.
constexpr int relaxation_degree(int m) noexcept { return m / 2; }

/// The constraint polynomials l_1 = X_1, ..., l_n = X_n and
/// l_{n+1} = n - X_1 - ... - X_n. `i` is 1-based.
template <class Scalar>
poly::Polynomial<Scalar> localizing_polynomial(int n, int i) {
  if (i < 1 || i > n + 1) throw ParameterError("localizing index outside 1..n+1");
  if (i <= n) return poly::Polynomial<Scalar>::variable(n, i);
  auto ell = poly::Polynomial<Scalar>::constant(n, Scalar(n));
  for (int j = 1; j <= n; ++j) ell.add_term(poly::Word{j}, Scalar(-1));
  return ell;
}

/// transpose(beta_a) * l_i * beta_b, the polynomial multiplying Y_i[a,b].
/// `i` is 1-based (1..n+1); `a` and `b` are 0-based positions in the basis.
template <class Scalar>
poly::Polynomial<Scalar> localizing_entry(const MonomialBasis& basis, int i, std::size_t a,
                                          std::size_t b) {
  const int n = basis.alphabet;
  if (a >= basis.size() || b >= basis.size()) throw ParameterError("basis index out of range");
  const auto ell = localizing_polynomial<Scalar>(n, i);
  const poly::Word left = basis.words[a].transpose();
  const poly::Word& right = basis.words[b];
  poly::Polynomial<Scalar> out(n);
  for (const auto& [w, c] : ell.terms()) out.add_term(left * w * right, c);
  return out;
}

/// Builds the standard-form SDP whose optimum is the smallest lambda with
/// lambda + sign * distinct_product_sum(m, n) in the sum-of-squares cone
/// generated by l_1..l_{n+1} at degree d = floor(m/2).
///
/// Layout: block 0 is the 1x1 lambda block, blocks 1..n+1 are the q x q Gram
/// blocks Y_i. Constraint k corresponds to word_at(k, n) for every word of
/// degree <= 2d+1 and reads
///
///   lambda * [w = 1] - sum_i <coeff of w in localizing_entry(i,.,.), Y_i> = -sign * target_w.
///
/// The objective selects lambda.
sdp::SdpProblem assemble_sdp(int m, int n, Sign sign);

}  // namespace ncagm::sos
