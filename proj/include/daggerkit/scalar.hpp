#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "daggerkit/errors.hpp"

namespace dk {

using Rat = mpq_class;

/// Exact element of the Gaussian rationals Q(i).
///
/// Both components are kept canonical (reduced, positive denominator), so
/// structural equality is semantic equality.
struct Scalar {
  Rat re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long n) : re(n), im(0) {}  // NOLINT: implicit by design
  Scalar(Rat r) : re(std::move(r)), im(0) { re.canonicalize(); }
  Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  Scalar(long n, long d, long ni, long di) : re(n, d), im(ni, di) {
    if (d == 0 || di == 0) throw DivisionByZero();
    re.canonicalize();
    im.canonicalize();
  }

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool isReal() const { return sgn(im) == 0; }
  bool isImaginary() const { return sgn(re) == 0; }

  /// a^2 + b^2, the norm to Q; zero iff the scalar is zero.
  Rat normSq() const { return re * re + im * im; }

  Scalar inverse() const {
    if (isZero()) throw DivisionByZero();
    Rat n = normSq();
    return Scalar(re / n, -im / n);
  }

  Scalar operator-() const { return Scalar(-re, -im); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar conj(const Scalar& a) { return Scalar(a.re, -a.im); }

/// Canonical text form `a/b+c/d*i` with optional terms, e.g. `-1`, `i`, `3/2-i`.
std::string to_string(const Scalar& a);

/// Inverse of to_string; accepts the forms the printer emits plus whitespace
/// and a bare coefficient before `i` without `*`. Throws SyntaxError.
Scalar parseScalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& a);

}  // namespace dk
