// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace ncagm::sdp {

enum class BlockKind { dense, diagonal };

struct Block {
  int size = 1;
  BlockKind kind = BlockKind::dense;

  friend bool operator==(const Block&, const Block&) = default;
};

/// One stored coefficient of a block-diagonal symmetric matrix. Indices are
/// 0-based and row <= col; the mirrored (col,row) entry is implied.
struct Entry {
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Sparse symmetric block-diagonal matrix kept in upper-triangle coordinate
/// form, sorted by (block,row,col) with no duplicates or zeros once
/// canonicalized.
class SparseSymmetric {
 public:
  SparseSymmetric() = default;
  explicit SparseSymmetric(std::vector<Entry> entries);

  /// Adds to the (block,row,col) coefficient; (row,col) may be given in
  /// either order. Call canonicalize() before reading.
  void add(int block, int row, int col, double value);
  void canonicalize();

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;

  friend bool operator==(const SparseSymmetric&, const SparseSymmetric&) = default;

 private:
  std::vector<Entry> entries_;
};

struct Constraint {
  SparseSymmetric matrix;
  double rhs = 0.0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Provenance of a problem built from the inequality family.
struct ProblemInfo {
  int m = 0;
  int n = 0;
  int d = 0;
  int sign = 1;
  bool reduced = false;

  friend bool operator==(const ProblemInfo&, const ProblemInfo&) = default;
};

/// Standard-form block-diagonal SDP
///
///   minimize tr(C Y)  subject to  tr(A_k Y) = b_k,  Y = diag(Y_0, Y_1, ...) >= 0.
///
/// Diagonal blocks hold a nonnegative vector instead of a PSD matrix.
struct SdpProblem {
  std::vector<Block> blocks;
  SparseSymmetric objective;
  std::vector<Constraint> constraints;
  std::optional<ProblemInfo> info;

  std::size_t num_constraints() const noexcept { return constraints.size(); }
  /// Sum of block sizes.
  std::size_t total_dimension() const noexcept;
  /// Scalar unknowns: size^2 per dense block, size per diagonal block.
  std::size_t scalar_unknowns() const noexcept;

  /// Throws ParameterError if any entry falls outside its block, sits below
  /// the diagonal, or is off-diagonal inside a diagonal block.
  void validate() const;

  friend bool operator==(const SdpProblem&, const SdpProblem&) = default;
};

}  // namespace ncagm::sdp
