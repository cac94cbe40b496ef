// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sdp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "ncagm/errors.hpp"

namespace ncagm::sdp {

SparseSymmetric::SparseSymmetric(std::vector<Entry> entries) : entries_(std::move(entries)) {
  canonicalize();
}

void SparseSymmetric::add(int block, int row, int col, double value) {
  if (row > col) std::swap(row, col);
  entries_.push_back({block, row, col, value});
}

void SparseSymmetric::canonicalize() {
  auto key = [](const Entry& e) { return std::tie(e.block, e.row, e.col); };
  std::stable_sort(entries_.begin(), entries_.end(),
                   [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const Entry& e : entries_) {
    if (!merged.empty() && key(merged.back()) == key(e)) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0.0; });
  entries_ = std::move(merged);
}

double SparseSymmetric::max_abs() const noexcept {
  double m = 0.0;
  for (const Entry& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

double SparseSymmetric::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const Entry& e : entries_) s += (e.row == e.col ? 1.0 : 2.0) * e.value * e.value;
  return std::sqrt(s);
}

std::size_t SdpProblem::total_dimension() const noexcept {
  std::size_t t = 0;
  for (const Block& b : blocks) t += static_cast<std::size_t>(b.size);
  return t;
}

std::size_t SdpProblem::scalar_unknowns() const noexcept {
  std::size_t t = 0;
  for (const Block& b : blocks) {
    auto s = static_cast<std::size_t>(b.size);
    t += b.kind == BlockKind::dense ? s * s : s;
  }
  return t;
}

void SdpProblem::validate() const {
  for (const Block& b : blocks) {
    if (b.size < 1) throw ParameterError("block sizes must be positive");
  }
  auto check = [&](const SparseSymmetric& mat, const std::string& what) {
    for (const Entry& e : mat.entries()) {
      if (e.block < 0 || e.block >= static_cast<int>(blocks.size())) {
        throw ParameterError(what + ": block index out of range");
      }
      const Block& b = blocks[e.block];
      if (e.row < 0 || e.col >= b.size || e.row > e.col) {
        throw ParameterError(what + ": entry outside the upper triangle of its block");
      }
      if (b.kind == BlockKind::diagonal && e.row != e.col) {
        throw ParameterError(what + ": off-diagonal entry in a diagonal block");
      }
    }
  };
  check(objective, "objective");
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    check(constraints[k].matrix, "constraint " + std::to_string(k + 1));
  }
}

}  // namespace ncagm::sdp
