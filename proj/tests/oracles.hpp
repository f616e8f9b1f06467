#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "daggerkit/hermforms.hpp"

namespace oracle {

using dk::Matrix;
using dk::Pairing;
using dk::Rat;
using dk::Scalar;
using dk::SignatureQuad;
using dk::SuperDims;

// char poly of M by Faddeev-LeVerrier: coefficients of det(xI - M),
// c[0] = leading 1 down to c[n]
inline std::vector<Scalar> charPoly(const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[0] = Scalar(1);
  Matrix acc = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c[k - 1];
    Matrix ma = m * acc;
    Scalar tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += ma.at(i, i);
    c[k] = -(tr / Scalar(static_cast<long>(k)));
  }
  return c;
}

// positive/negative eigenvalue counts of a Hermitian matrix via Descartes'
// rule, exact because the characteristic polynomial is real-rooted
inline std::pair<std::size_t, std::size_t> hermitianSignCount(const Matrix& m) {
  auto coeff = charPoly(m);
  std::vector<Rat> real;
  for (auto& c : coeff) {
    if (sgn(c.im) != 0) throw std::logic_error("oracle: non-real char poly");
    real.push_back(c.re);
  }
  auto variations = [](const std::vector<Rat>& p) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& c : p) {
      int s = sgn(c);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::size_t pos = variations(real);
  std::vector<Rat> flipped = real;
  for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
  std::size_t neg = variations(flipped);
  return {pos, neg};
}

// signature by char-poly sign counting on the even and odd blocks
inline SignatureQuad signatureOracle(const Pairing& h) {
  SuperDims d = h.space;
  SignatureQuad sig;
  if (d.p > 0) {
    Matrix a(d.p, d.p);
    for (std::size_t i = 0; i < d.p; ++i)
      for (std::size_t j = 0; j < d.p; ++j) a.at(i, j) = h.gram.at(i, j);
    std::tie(sig.p1, sig.p2) = hermitianSignCount(a);
  }
  if (d.q > 0) {
    Matrix b(d.q, d.q);
    for (std::size_t i = 0; i < d.q; ++i)
      for (std::size_t j = 0; j < d.q; ++j) b.at(i, j) = h.gram.at(d.p + i, d.p + j);
    if (h.conv == dk::Convention::SUPER) b = Scalar(Rat(0), Rat(-1)) * b;
    std::tie(sig.p3, sig.p4) = hermitianSignCount(b);
  }
  return sig;
}

// lambda of Eq-style composite by raw index sums: for each basis functional
// e^a,  lambda(e^a) = sum_k (-1)^{|a||k|} conj(<coev(1), e_k (x) e^a>) e^k
inline Matrix lambdaOracle(const Pairing& h) {
  SuperDims d = h.space;
  std::size_t n = d.total();
  bool super = h.conv == dk::Convention::SUPER;
  Matrix hs = h.gram.transpose().inverse();  // dual Gram
  if (!super) {
    Matrix parity = Matrix::identity(n);
    for (std::size_t k = d.p; k < n; ++k) parity.at(k, k) = Scalar(-1);
    hs = hs * parity;
  }
  Matrix lambda(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar inner(0);
      for (std::size_t m = 0; m < n; ++m) {
        Scalar term = h.gram.at(m, k) * hs.at(m, a);
        if (super && d.odd(k) && d.odd(m)) term = -term;
        inner += term;
      }
      Scalar value = conj(inner);
      if (d.odd(a) && d.odd(k)) value = -value;
      lambda.at(k, a) = value;
    }
  return lambda;
}

}  // namespace oracle
