// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/certify/sos.hpp"

#include "ncagm/errors.hpp"
#include "ncagm/sos/basis.hpp"

namespace ncagm::certify {

namespace {

void check_shape(const SosCertificate& cert) {
  if (cert.n < 1 || cert.m < 1 || cert.m > cert.n) throw ParameterError("certificate needs 1 <= m <= n");
  if (cert.gram_blocks.size() != static_cast<std::size_t>(cert.n + 1)) {
    throw ParameterError("certificate needs n+1 Gram blocks");
  }
  const std::size_t q = sos::word_count(cert.n, sos::relaxation_degree(cert.m));
  for (const auto& b : cert.gram_blocks) {
    if (b.dim() != q) throw ParameterError("Gram block dimension differs from the basis size");
  }
}

}  // namespace

poly::Polynomial<Rational> sos_expansion(const SosCertificate& cert) {
  check_shape(cert);
  const int n = cert.n;
  const sos::MonomialBasis basis = sos::monomial_basis(n, sos::relaxation_degree(cert.m));
  const std::size_t q = basis.size();
  poly::Polynomial<Rational> out(n);
  for (int i = 1; i <= n + 1; ++i) {
    const auto ell = sos::localizing_polynomial<Rational>(n, i);
    const RationalMatrix& y = cert.gram_blocks[static_cast<std::size_t>(i - 1)];
    for (std::size_t a = 0; a < q; ++a) {
      const poly::Word left = basis.words[a].transpose();
      for (std::size_t b = 0; b < q; ++b) {
        if (sgn(y(a, b)) == 0) continue;
        for (const auto& [w, c] : ell.terms()) out.add_term(left * w * basis.words[b], Rational(c * y(a, b)));
      }
    }
  }
  return out;
}

poly::Polynomial<Rational> sos_target(const SosCertificate& cert) {
  auto target = poly::distinct_product_sum<Rational>(cert.m, cert.n);
  target *= Rational(static_cast<int>(cert.sign));
  target.add_term(poly::Word{}, cert.lambda);
  return target;
}

bool verify_sos(const SosCertificate& cert) {
  check_shape(cert);
  for (const auto& b : cert.gram_blocks) {
    if (!psd_check_exact(b)) return false;
  }
  return sos_expansion(cert) == sos_target(cert);
}

SosCertificate build_m2_certificate(int n) {
  if (n < 2) throw ParameterError("build_m2_certificate requires n >= 2");
  const Rational nn(n);
  const Rational n1(n - 1);
  const Rational a = Rational(5) * n1 / 4;
  const Rational b = Rational(-3) * n1 / (2 * nn);
  const Rational c = Rational(3 - n) / (2 * nn);
  const Rational d = Rational(2) * n1 / (nn * nn);
  const Rational e = Rational(n - 2) / (nn * nn);
  const Rational f = d;
  const Rational g = e;
  const Rational x = n1 / 4;
  const Rational y = -n1 / (2 * nn);
  const Rational z = d;
  const Rational w = e;

  SosCertificate cert;
  cert.m = 2;
  cert.n = n;
  cert.sign = sos::Sign::plus;
  cert.lambda = Rational(n * (n - 1)) / 4;
  const auto q = static_cast<std::size_t>(n + 1);
  // Basis order (1, X_1, ..., X_n): index 0 is the unit, index j is X_j.
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    RationalMatrix blk(q);
    blk.set(0, 0, a);
    for (std::size_t j = 1; j < q; ++j) {
      blk.set(0, j, j == i ? b : c);
      for (std::size_t k = j; k < q; ++k) {
        if (j == k) blk.set(j, j, j == i ? d : f);
        else if (j == i || k == i) blk.set(j, k, e);
        else blk.set(j, k, g);
      }
    }
    cert.gram_blocks.push_back(std::move(blk));
  }
  RationalMatrix last(q);
  last.set(0, 0, x);
  for (std::size_t j = 1; j < q; ++j) {
    last.set(0, j, y);
    last.set(j, j, z);
    for (std::size_t k = j + 1; k < q; ++k) last.set(j, k, w);
  }
  cert.gram_blocks.push_back(std::move(last));
  return cert;
}

}  // namespace ncagm::certify
