// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sdp/kernels.hpp"

#include <omp.h>

#include <cmath>

namespace ncagm::sdp::kernels {

template <class Real>
std::vector<BlockRows<Real>> split_by_block(const std::vector<Block>& blocks,
                                            const std::vector<const SparseSymmetric*>& constraints) {
  std::vector<BlockRows<Real>> out(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out[b].kind = blocks[b].kind;
    out[b].size = blocks[b].size;
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    // Entries are sorted by block, so each block's slice is contiguous.
    int current = -1;
    for (const Entry& e : constraints[i]->entries()) {
      BlockRows<Real>& br = out[static_cast<std::size_t>(e.block)];
      if (e.block != current) {
        br.rows.push_back(static_cast<int>(i));
        br.start.push_back(br.start.back());
        current = e.block;
      }
      br.entries.push_back({e.row, e.col, static_cast<Real>(e.value)});
      ++br.start.back();
    }
  }
  return out;
}

namespace {

/// G = X A_i Zinv for the entries of one constraint.
template <class Real>
void left_right_product(const BlockRows<Real>& data, std::size_t p, const Matrix<Real>& x,
                        const Matrix<Real>& zinv, Matrix<Real>& g) {
  g.setZero();
  for (std::size_t k = data.start[p]; k < data.start[p + 1]; ++k) {
    const LocalEntry<Real>& e = data.entries[k];
    g.noalias() += e.value * x.col(e.row) * zinv.row(e.col);
    if (e.row != e.col) g.noalias() += e.value * x.col(e.col) * zinv.row(e.row);
  }
}

/// tr(A_j^T G) over the stored upper-triangle entries of A_j.
template <class Real>
Real contract(const BlockRows<Real>& data, std::size_t t, const Matrix<Real>& g) {
  Real s = 0;
  for (std::size_t k = data.start[t]; k < data.start[t + 1]; ++k) {
    const LocalEntry<Real>& e = data.entries[k];
    s += e.row == e.col ? e.value * g(e.row, e.row) : e.value * (g(e.row, e.col) + g(e.col, e.row));
  }
  return s;
}

template <class Real>
void schur_dense_row(const BlockRows<Real>& data, std::size_t p, const Matrix<Real>& x,
                     const Matrix<Real>& zinv, Matrix<Real>& g, Matrix<Real>& schur) {
  left_right_product(data, p, x, zinv, g);
  const int i = data.rows[p];
  for (std::size_t t = p; t < data.rows.size(); ++t) {
    schur(i, data.rows[t]) += contract(data, t, g);
  }
}

}  // namespace

template <class Real>
void schur_dense_serial(const BlockRows<Real>& data, const Matrix<Real>& x, const Matrix<Real>& zinv,
                        Matrix<Real>& schur) {
  Matrix<Real> g(data.size, data.size);
  for (std::size_t p = 0; p < data.rows.size(); ++p) schur_dense_row(data, p, x, zinv, g, schur);
}

template <class Real>
void schur_dense_parallel(const BlockRows<Real>& data, const Matrix<Real>& x, const Matrix<Real>& zinv,
                          Matrix<Real>& schur) {
  const auto count = static_cast<long>(data.rows.size());
#pragma omp parallel
  {
    Matrix<Real> g(data.size, data.size);
#pragma omp for schedule(dynamic, 4)
    for (long p = 0; p < count; ++p) {
      schur_dense_row(data, static_cast<std::size_t>(p), x, zinv, g, schur);
    }
  }
}

template <class Real>
void schur_diagonal(const BlockRows<Real>& data, const Vector<Real>& x, const Vector<Real>& zinv,
                    Matrix<Real>& schur) {
  // Group by position: only constraints sharing a diagonal position interact.
  std::vector<std::vector<std::pair<int, Real>>> by_pos(static_cast<std::size_t>(data.size));
  for (std::size_t p = 0; p < data.rows.size(); ++p) {
    for (std::size_t k = data.start[p]; k < data.start[p + 1]; ++k) {
      by_pos[static_cast<std::size_t>(data.entries[k].row)].emplace_back(data.rows[p],
                                                                          data.entries[k].value);
    }
  }
  for (std::size_t r = 0; r < by_pos.size(); ++r) {
    const Real w = x[static_cast<Eigen::Index>(r)] * zinv[static_cast<Eigen::Index>(r)];
    const auto& list = by_pos[r];
    for (std::size_t s = 0; s < list.size(); ++s) {
      for (std::size_t t = s; t < list.size(); ++t) {
        const int i = std::min(list[s].first, list[t].first);
        const int j = std::max(list[s].first, list[t].first);
        schur(i, j) += w * list[s].second * list[t].second;
      }
    }
  }
}

namespace {

template <class Real, bool Parallel>
PivotedCholesky<Real> pivoted_cholesky_impl(Matrix<Real> a, Real rel_tol) {
  const Eigen::Index n = a.rows();
  PivotedCholesky<Real> out;
  out.perm.resize(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) out.perm[static_cast<std::size_t>(k)] = k;
  Real first_pivot = 0;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, i) > a(best, best)) best = i;
    }
    const Real pivot = a(best, best);
    if (k == 0) first_pivot = pivot;
    if (!(pivot > rel_tol * first_pivot) || pivot <= 0.0) break;

    if (best != k) {
      // Symmetric swap of rows/columns k and best within the lower triangle.
      a.row(k).head(k).swap(a.row(best).head(k));
      std::swap(a(k, k), a(best, best));
      for (Eigen::Index i = k + 1; i < best; ++i) std::swap(a(i, k), a(best, i));
      for (Eigen::Index i = best + 1; i < n; ++i) std::swap(a(i, k), a(i, best));
      std::swap(out.perm[static_cast<std::size_t>(k)], out.perm[static_cast<std::size_t>(best)]);
    }

    const Real lkk = std::sqrt(pivot);
    a(k, k) = lkk;
    for (Eigen::Index i = k + 1; i < n; ++i) a(i, k) /= lkk;

    // Trailing update of the lower triangle, one column per iteration.
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const Real ljk = a(j, k);
        for (Eigen::Index i = j; i < n; ++i) a(i, j) -= a(i, k) * ljk;
      }
    } else {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const Real ljk = a(j, k);
        for (Eigen::Index i = j; i < n; ++i) a(i, j) -= a(i, k) * ljk;
      }
    }
    out.rank = k + 1;
  }

  out.lower = a.template triangularView<Eigen::Lower>();
  return out;
}

}  // namespace

template <class Real>
PivotedCholesky<Real> pivoted_cholesky_serial(Matrix<Real> a, Real rel_tol) {
  return pivoted_cholesky_impl<Real, false>(std::move(a), rel_tol);
}

template <class Real>
PivotedCholesky<Real> pivoted_cholesky_parallel(Matrix<Real> a, Real rel_tol) {
  return pivoted_cholesky_impl<Real, true>(std::move(a), rel_tol);
}

#define NCAGM_INSTANTIATE_KERNELS(Real)                                                                    \
  template std::vector<BlockRows<Real>> split_by_block<Real>(const std::vector<Block>&,                   \
                                                             const std::vector<const SparseSymmetric*>&); \
  template void schur_dense_serial<Real>(const BlockRows<Real>&, const Matrix<Real>&, const Matrix<Real>&, \
                                         Matrix<Real>&);                                                  \
  template void schur_dense_parallel<Real>(const BlockRows<Real>&, const Matrix<Real>&,                    \
                                           const Matrix<Real>&, Matrix<Real>&);                           \
  template void schur_diagonal<Real>(const BlockRows<Real>&, const Vector<Real>&, const Vector<Real>&,     \
                                     Matrix<Real>&);                                                      \
  template PivotedCholesky<Real> pivoted_cholesky_serial<Real>(Matrix<Real>, Real);                       \
  template PivotedCholesky<Real> pivoted_cholesky_parallel<Real>(Matrix<Real>, Real);

NCAGM_INSTANTIATE_KERNELS(double)
NCAGM_INSTANTIATE_KERNELS(long double)

#undef NCAGM_INSTANTIATE_KERNELS

}  // namespace ncagm::sdp::kernels
