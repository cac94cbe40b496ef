// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/poly/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ncagm/errors.hpp"

namespace ncagm::poly {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw ParameterError("permutation on an empty alphabet");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw ParameterError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ParameterError("permutation on an empty alphabet");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw ParameterError("transposition letter out of range");
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::cycle(int n) {
  auto p = identity(n);
  std::rotate(p.images_.begin(), p.images_.begin() + 1, p.images_.end());
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
  return out;
}

int Permutation::operator()(int letter) const {
  if (letter < 1 || letter > size()) throw ParameterError("letter outside the permutation domain");
  return images_[letter - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

Word Permutation::apply(const Word& w) const {
  std::vector<int> letters;
  letters.reserve(w.degree());
  for (int l : w.letters()) letters.push_back((*this)(l));
  return Word(std::move(letters));
}

Permutation operator*(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) throw ParameterError("composing permutations of different sizes");
  std::vector<int> img(sigma.images_.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = tau.images_[sigma.images_[k] - 1];
  return Permutation(std::move(img));
}

}  // namespace ncagm::poly
