/*
 * Copyright 2026 The vmvt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <string>

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"
#include "vmvt/arith/rational.hpp"

namespace vmvt {

// Element x + y*sqrt(D) of a real quadratic extension of the rationals.
//
// The sign of a value is decided by case analysis on the signs of x and y
// and an exact comparison of x^2 against y^2*D. No floating point enters any
// comparison: several downstream threshold tests are decided by margins far
// below what doubles can resolve.
//
// A perfect-square radicand is folded into the rational part on
// construction, so a stored nonzero surd always has a non-square D.
// Purely rational values carry D == 0 and combine with any radicand.
class QuadExt {
 public:
  QuadExt() : d_(0), rat_(0), surd_(0) {}
  QuadExt(const Rational& r) : d_(0), rat_(r), surd_(0) {}  // NOLINT
  QuadExt(long n) : d_(0), rat_(n), surd_(0) {}             // NOLINT

  QuadExt(const Int& d, const Rational& rat, const Rational& surd)
      : d_(d), rat_(rat), surd_(surd) {
    normalize();
  }

  // sqrt(x) for rational x >= 0, as (1/den)*sqrt(num*den).
  static QuadExt sqrt_of(const Rational& x) {
    if (x.sign() < 0) throw HypothesisError("sqrt of negative rational");
    Int radicand = x.numerator() * x.denominator();
    return QuadExt(radicand, Rational(0), Rational(Int(1), x.denominator()));
  }

  const Int& radicand() const { return d_; }
  const Rational& rational_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  bool is_rational() const { return surd_.is_zero(); }

  // Exact rational value; hypothesis: is_rational().
  const Rational& as_rational() const {
    if (!is_rational()) throw HypothesisError("QuadExt value is irrational");
    return rat_;
  }

  bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

  int sign() const {
    int sx = rat_.sign(), sy = surd_.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: |x| vs |y|*sqrt(D), squared. Equality cannot occur:
    // sqrt(D) is irrational here (D non-square with surd != 0).
    Rational x2 = rat_ * rat_;
    Rational y2d = surd_ * surd_ * Rational(d_);
    return x2 > y2d ? sx : sy;
  }

  QuadExt operator-() const { return QuadExt(d_, -rat_, -surd_, NoNormalize{}); }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    Int d = merged_radicand(a, b);
    return QuadExt(d, a.rat_ + b.rat_, a.surd_ + b.surd_, NoNormalize{});
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    Int d = merged_radicand(a, b);
    Rational rat = a.rat_ * b.rat_ + a.surd_ * b.surd_ * Rational(d);
    Rational surd = a.rat_ * b.surd_ + a.surd_ * b.rat_;
    return QuadExt(d, rat, surd, NoNormalize{});
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw DivisionByZero("QuadExt division by zero");
    Int d = merged_radicand(a, b);
    // Multiply by the conjugate; the norm is nonzero for nonzero b because
    // sqrt(D) is irrational whenever the surd part survives normalization.
    Rational norm = b.rat_ * b.rat_ - b.surd_ * b.surd_ * Rational(d);
    QuadExt conj(d, b.rat_, -b.surd_, NoNormalize{});
    QuadExt prod = a * conj;
    return QuadExt(d, prod.rat_ / norm, prod.surd_ / norm, NoNormalize{});
  }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    merged_radicand(a, b);  // reject mismatched radicands even for ==
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  QuadExt pow(unsigned long e) const {
    QuadExt r(Rational(1));
    QuadExt base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (is_rational()) return rat_.to_string();
    std::string s = rat_.to_string();
    if (surd_.sign() >= 0) s += " + " + surd_.to_string();
    else s += " - " + (-surd_).to_string();
    return s + "*sqrt(" + vmvt::to_string(d_) + ")";
  }

 private:
  struct NoNormalize {};
  QuadExt(const Int& d, Rational rat, Rational surd, NoNormalize)
      : d_(d), rat_(std::move(rat)), surd_(std::move(surd)) {
    if (surd_.is_zero()) d_ = 0;
  }

  void normalize() {
    if (surd_.is_zero()) {
      d_ = 0;
      return;
    }
    if (d_ <= 0) throw HypothesisError("QuadExt radicand must be positive");
    if (is_perfect_square(d_)) {
      rat_ += surd_ * Rational(isqrt_floor(d_));
      surd_ = Rational(0);
      d_ = 0;
    }
  }

  static Int merged_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0) return a.d_;
    if (a.d_ != b.d_)
      throw RadicandMismatch("mixing sqrt(" + vmvt::to_string(a.d_) + ") with sqrt(" +
                             vmvt::to_string(b.d_) + ")");
    return a.d_;
  }

  Int d_;          // 0 when the value is purely rational
  Rational rat_;   // rational part
  Rational surd_;  // coefficient of sqrt(d_)
};

inline QuadExt operator*(const Rational& a, const QuadExt& b) { return QuadExt(a) * b; }

}  // namespace vmvt
