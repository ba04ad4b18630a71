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

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"

namespace vmvt {

// Exact rational scalar. Invariants, maintained by every constructor and
// operation:
//   * gcd(|numerator|, denominator) == 1,
//   * denominator >= 1.
// The representation is a canonicalized GMP rational; division by zero is
// rejected with a distinct error instead of being left undefined.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : q_(n) {}    // NOLINT(google-explicit-constructor)
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    r.q_.canonicalize();
    return r;
  }

  Int numerator() const { return Int(q_.get_num()); }
  Int denominator() const { return Int(q_.get_den()); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational operator-() const { return from_mpq(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Largest integer <= value.
  Int floor() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
  }

  // Smallest integer >= value.
  Int ceil() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
  }

  Rational pow(unsigned long e) const {
    Rational r(1);
    Rational base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(denominator(), numerator());
  }

  // "n" for integers, "n/d" otherwise. Round-trip exact.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  // Crude double approximation; for diagnostics only, never for decisions.
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

inline Rational operator+(const Rational& a, long b) { return a + Rational(b); }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace vmvt
