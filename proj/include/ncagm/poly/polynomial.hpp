// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncagm/errors.hpp"
#include "ncagm/poly/permutation.hpp"
#include "ncagm/poly/scalar.hpp"
#include "ncagm/poly/word.hpp"

namespace ncagm::poly {

/// Element of the free algebra R<X1,...,Xn> with coefficients in Scalar
/// (Rational or double). Zero coefficients are never stored and every
/// arithmetic result is canonical.
template <class Scalar>
class Polynomial {
 public:
  using Terms = std::map<Word, Scalar>;
  using Traits = ScalarTraits<Scalar>;

  /// The zero polynomial over n letters.
  explicit Polynomial(int alphabet) : alphabet_(alphabet) {
    if (alphabet < 1) throw ParameterError("polynomial alphabet must be non-empty");
  }

  static Polynomial constant(int alphabet, const Scalar& c) {
    Polynomial p(alphabet);
    p.add_term(Word{}, c);
    return p;
  }
  static Polynomial monomial(int alphabet, const Word& w, const Scalar& c = Scalar(1)) {
    Polynomial p(alphabet);
    p.add_term(w, c);
    return p;
  }
  static Polynomial variable(int alphabet, int letter) {
    return monomial(alphabet, Word{letter});
  }

  int alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest word degree; -1 for the zero polynomial.
  int degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
  }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds c * w, dropping the entry if it cancels.
  void add_term(const Word& w, const Scalar& c) {
    if (w.max_letter() > alphabet_) throw ParameterError("letter outside the alphabet");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, Traits::canonical(c));
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial transpose() const {
    Polynomial out(alphabet_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.transpose(), c);
    return out;
  }

  bool is_symmetric() const { return transpose() == *this; }

  /// Relabels letter i as sigma(i) throughout.
  Polynomial permuted(const Permutation& sigma) const {
    if (sigma.size() != alphabet_) throw ParameterError("permutation size differs from alphabet");
    Polynomial out(alphabet_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(sigma.apply(w), c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    check_alphabet(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    check_alphabet(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, Scalar(-c));
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c = Traits::canonical(Scalar(c * s));
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_alphabet(rhs);
    Polynomial out(lhs.alphabet_);
    for (const auto& [u, a] : lhs.terms_) {
      for (const auto& [v, b] : rhs.terms_) out.add_term(u * v, Scalar(a * b));
    }
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.alphabet_ == rhs.alphabet_ && lhs.terms_ == rhs.terms_;
  }

  /// Canonical rendering in word order, e.g. "1/2 + 2*X1*X2 - X3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string coeff = Traits::to_string(c);
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (w.is_unit()) {
        out += coeff;
      } else {
        if (coeff != "1") out += coeff + "*";
        out += w.to_string();
      }
    }
    return out;
  }

 private:
  void check_alphabet(const Polynomial& other) const {
    if (other.alphabet_ != alphabet_) throw ParameterError("polynomials over different alphabets");
  }

  int alphabet_;
  Terms terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

/// Sum of X_{j1}...X_{jm} over all injective index tuples (j1,...,jm) drawn
/// from 1..n; n!/(n-m)! words, each with coefficient one.
template <class Scalar>
Polynomial<Scalar> distinct_product_sum(int m, int n) {
  if (n < 1 || m < 1 || m > n) throw ParameterError("distinct_product_sum requires 1 <= m <= n");
  Polynomial<Scalar> out(n);
  std::vector<int> tuple;
  std::vector<bool> used(n + 1, false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == m) {
      out.add_term(Word(tuple), Scalar(1));
      return;
    }
    for (int j = 1; j <= n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      tuple.push_back(j);
      self(self);
      tuple.pop_back();
      used[j] = false;
    }
  };
  extend(extend);
  return out;
}

/// n! / (n-m)!
long long falling_factorial(int n, int m);

}  // namespace ncagm::poly
