// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sos/compiler.hpp"

namespace ncagm::sos {

sdp::SdpProblem assemble_sdp(int m, int n, Sign sign) {
  if (n < 1 || m < 1 || m > n) throw ParameterError("assemble_sdp requires 1 <= m <= n");
  const int d = relaxation_degree(m);
  const MonomialBasis basis = monomial_basis(n, d);
  const int q = static_cast<int>(basis.size());
  const std::size_t num_words = word_count(n, 2 * d + 1);

  sdp::SdpProblem problem;
  problem.info = sdp::ProblemInfo{m, n, d, static_cast<int>(sign), false};
  problem.blocks.push_back({1, sdp::BlockKind::dense});
  for (int i = 1; i <= n + 1; ++i) problem.blocks.push_back({q, sdp::BlockKind::dense});
  problem.objective.add(0, 0, 0, 1.0);
  problem.objective.canonicalize();

  std::vector<sdp::SparseSymmetric> rows(num_words);
  rows[0].add(0, 0, 0, 1.0);
  for (int i = 1; i <= n + 1; ++i) {
    for (int a = 0; a < q; ++a) {
      for (int b = a; b < q; ++b) {
        // Y is symmetric, so the (a,b) and (b,a) products share one stored entry.
        const double weight = a == b ? 1.0 : 0.5;
        auto add = [&](const poly::FloatPolynomial& p) {
          for (const auto& [w, c] : p.terms()) rows[word_index(w, n)].add(i, a, b, -weight * c);
        };
        add(localizing_entry<double>(basis, i, a, b));
        if (a != b) add(localizing_entry<double>(basis, i, b, a));
      }
    }
  }

  const auto target = poly::distinct_product_sum<double>(m, n);
  problem.constraints.resize(num_words);
  for (std::size_t k = 0; k < num_words; ++k) {
    rows[k].canonicalize();
    problem.constraints[k].matrix = std::move(rows[k]);
    const double t = target.coefficient(word_at(k, n));
    problem.constraints[k].rhs = t == 0.0 ? 0.0 : -static_cast<double>(sign) * t;
  }
  return problem;
}

}  // namespace ncagm::sos
