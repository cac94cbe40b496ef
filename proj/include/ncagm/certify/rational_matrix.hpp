// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "ncagm/poly/scalar.hpp"

namespace ncagm::certify {

/// Dense symmetric matrix over the rationals. set() writes both (i,j) and
/// (j,i), so the matrix stays symmetric by construction.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t dim = 0) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v);

  static RationalMatrix identity(std::size_t dim);
  /// Throws ParameterError unless rows is square and symmetric.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  Eigen::MatrixXd to_double() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> data_;
};

/// Exact PSD test: LDL^T with the largest remaining diagonal entry as
/// pivot. A zero pivot is accepted only if its row has vanished.
bool psd_check_exact(const RationalMatrix& m);

}  // namespace ncagm::certify
