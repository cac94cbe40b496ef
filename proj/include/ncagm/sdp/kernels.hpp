// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "ncagm/sdp/problem.hpp"

/// Data-parallel inner loops of the interior-point solver. Each kernel has a
/// serial reference and an OpenMP variant that must agree with it exactly
/// (every output element is produced by one thread in the same order).
/// Kernels are instantiated for double and long double.
namespace ncagm::sdp::kernels {

template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <class Real>
struct LocalEntry {
  int row = 0;
  int col = 0;
  Real value = 0;
};

/// The constraint data restricted to one block, stored constraint-major.
/// `rows` lists the (solver-local) constraint indices touching the block in
/// ascending order; the entries of rows[p] are entries[start[p] .. start[p+1]).
template <class Real>
struct BlockRows {
  BlockKind kind = BlockKind::dense;
  int size = 0;
  std::vector<int> rows;
  std::vector<std::size_t> start{0};
  std::vector<LocalEntry<Real>> entries;
};

/// Splits constraint matrices into per-block row storage.
template <class Real>
std::vector<BlockRows<Real>> split_by_block(const std::vector<Block>& blocks,
                                            const std::vector<const SparseSymmetric*>& constraints);

/// M(i,j) += tr(A_i X A_j Zinv) over one dense block, upper triangle (i <= j) only.
template <class Real>
void schur_dense_serial(const BlockRows<Real>& data, const Matrix<Real>& x, const Matrix<Real>& zinv,
                        Matrix<Real>& schur);
template <class Real>
void schur_dense_parallel(const BlockRows<Real>& data, const Matrix<Real>& x, const Matrix<Real>& zinv,
                          Matrix<Real>& schur);

/// Diagonal-block counterpart; x and zinv are column vectors.
template <class Real>
void schur_diagonal(const BlockRows<Real>& data, const Vector<Real>& x, const Vector<Real>& zinv,
                    Matrix<Real>& schur);

/// Result of a diagonally pivoted Cholesky factorization P A P^T = L L^T.
template <class Real>
struct PivotedCholesky {
  /// perm[k] is the original index of the k-th pivot.
  std::vector<Eigen::Index> perm;
  /// Number of pivots above the threshold.
  Eigen::Index rank = 0;
  /// Lower-triangular factor; only the leading `rank` columns are meaningful.
  Matrix<Real> lower;
};

/// Greedy-diagonal-pivoted Cholesky of a symmetric positive semidefinite
/// matrix; stops once the largest remaining pivot drops to
/// rel_tol * (largest pivot). Only the lower triangle of `a` is read.
template <class Real>
PivotedCholesky<Real> pivoted_cholesky_serial(Matrix<Real> a, Real rel_tol);
template <class Real>
PivotedCholesky<Real> pivoted_cholesky_parallel(Matrix<Real> a, Real rel_tol);

}  // namespace ncagm::sdp::kernels
