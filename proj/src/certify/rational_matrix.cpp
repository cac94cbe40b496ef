// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/certify/rational_matrix.hpp"

#include "ncagm/errors.hpp"

namespace ncagm::certify {

void RationalMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= dim_ || j >= dim_) throw ParameterError("matrix index out of range");
  Rational c = v;
  c.canonicalize();
  data_[i * dim_ + j] = c;
  data_[j * dim_ + i] = c;
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParameterError("matrix is not square");
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows[i][j] != rows[j][i]) throw ParameterError("matrix is not symmetric");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j).get_d();
  }
  return out;
}

bool psd_check_exact(const RationalMatrix& input) {
  const std::size_t n = input.dim();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = input(i, j);
  }
  std::vector<std::size_t> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = i;

  while (!left.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < left.size(); ++k) {
      if (a[left[k] * n + left[k]] > a[left[best] * n + left[best]]) best = k;
    }
    const std::size_t p = left[best];
    const Rational pivot = a[p * n + p];
    if (sgn(pivot) < 0) return false;
    if (sgn(pivot) == 0) {
      // Every remaining diagonal entry is zero; PSD forces the rest to vanish.
      for (std::size_t i : left) {
        for (std::size_t j : left) {
          if (sgn(a[i * n + j]) != 0) return false;
        }
      }
      return true;
    }
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t i : left) {
      if (sgn(a[i * n + p]) == 0) continue;
      const Rational f = a[i * n + p] / pivot;
      for (std::size_t j : left) a[i * n + j] -= f * a[p * n + j];
    }
  }
  return true;
}

}  // namespace ncagm::certify
