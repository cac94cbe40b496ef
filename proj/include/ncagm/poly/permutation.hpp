// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ncagm/poly/word.hpp"

namespace ncagm::poly {

/// A permutation of the letters 1..n, stored as its image list.
class Permutation {
 public:
  /// images[k] is the image of letter k+1. Throws ParameterError unless the
  /// list is a bijection on 1..n with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps letters i and j.
  static Permutation transposition(int n, int i, int j);
  /// The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(int n);

  /// All n! permutations, in lexicographic order of their image lists.
  static std::vector<Permutation> all(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int letter) const;
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  /// Relabels every letter of the word.
  Word apply(const Word& w) const;

  /// Composition: (tau * sigma)(i) = tau(sigma(i)).
  friend Permutation operator*(const Permutation& tau, const Permutation& sigma);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace ncagm::poly
