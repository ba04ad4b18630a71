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

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"
#include "vmvt/arith/rational.hpp"

namespace vmvt {

enum class Cmp { Less, Equal, Greater, Indeterminate };

constexpr mpfr_prec_t kDefaultPrecision = 256;
constexpr mpfr_prec_t kMaxPrecision = 4096;

// Directed-rounding enclosure [lo, hi] of a real number.
//
// Every operation rounds lo down and hi up at the working precision, so the
// result is always a superset of the exact image: a chain of operations on
// enclosures of exact inputs yields an enclosure of the exact output.
// Comparisons certify an ordering only when the enclosures are disjoint;
// otherwise they answer Indeterminate and the caller may re-evaluate at a
// higher precision (see refine()).
class CertInterval {
 public:
  explicit CertInterval(mpfr_prec_t prec = kDefaultPrecision) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  CertInterval(const CertInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  CertInterval(CertInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  CertInterval& operator=(CertInterval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~CertInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static CertInterval of(const Rational& x, mpfr_prec_t prec = kDefaultPrecision) {
    CertInterval r(prec);
    mpfr_set_q(r.lo_, x.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, x.raw().get_mpq_t(), MPFR_RNDU);
    return r;
  }

  // Enclosure [lo, hi] from exact rational endpoints.
  static CertInterval hull(const Rational& lo, const Rational& hi,
                           mpfr_prec_t prec = kDefaultPrecision) {
    if (lo > hi) throw HypothesisError("hull endpoints out of order");
    CertInterval r(prec);
    mpfr_set_q(r.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static CertInterval of(const Int& x, mpfr_prec_t prec = kDefaultPrecision) {
    CertInterval r(prec);
    mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  static CertInterval of(long x, mpfr_prec_t prec = kDefaultPrecision) {
    return of(Int(x), prec);
  }

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  bool contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.raw().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, x.raw().get_mpq_t()) >= 0;
  }

  int sign_lo() const { return mpfr_sgn(lo_); }
  int sign_hi() const { return mpfr_sgn(hi_); }

  friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  CertInterval operator-() const {
    CertInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator*(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.prec_, b.prec_));
    mpfr_t c;  // candidate corner products
    mpfr_init2(c, r.prec_);
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    for (auto x : as)
      for (auto y : bs) {
        mpfr_mul(c, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(c, r.lo_) < 0) mpfr_set(r.lo_, c, MPFR_RNDD);
        mpfr_mul(c, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(c, r.hi_) > 0) mpfr_set(r.hi_, c, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(c);
    return r;
  }

  friend CertInterval operator/(const CertInterval& a, const CertInterval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
      throw DivisionByZero("interval divisor encloses zero");
    CertInterval inv(b.prec_);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }

  // Enclosure of value^(1/n); hypothesis lo >= 0, n >= 1.
  CertInterval root(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0) throw HypothesisError("root of interval with negative lower bound");
    if (n == 0) throw HypothesisError("zeroth root");
    CertInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
  }

  CertInterval sqrt() const { return root(2); }

  // Enclosure of sqrt(value) under the caller-certified hypothesis that the
  // true value is nonnegative: a lower endpoint that dipped below zero from
  // rounding is clamped to zero before taking the root.
  CertInterval sqrt_nonneg() const {
    if (mpfr_sgn(hi_) < 0) throw HypothesisError("sqrt_nonneg of certainly negative interval");
    if (mpfr_sgn(lo_) >= 0) return root(2);
    CertInterval clamped(prec_);
    mpfr_set_zero(clamped.lo_, 1);
    mpfr_set(clamped.hi_, hi_, MPFR_RNDU);
    return clamped.root(2);
  }

  CertInterval pow_ui(unsigned long e) const {
    CertInterval r = of(Rational(1), prec_);
    CertInterval base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Exact width as a rational (both endpoints are dyadic).
  Rational width() const {
    mpq_class lo_q, hi_q;
    mpfr_get_q(lo_q.get_mpq_t(), lo_);
    mpfr_get_q(hi_q.get_mpq_t(), hi_);
    return Rational::from_mpq(hi_q - lo_q);
  }

  Rational lo_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return Rational::from_mpq(q);
  }

  Rational hi_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return Rational::from_mpq(q);
  }

  // Certified three-way comparison. Equal is only reported for two
  // degenerate point intervals.
  friend Cmp compare(const CertInterval& a, const CertInterval& b) {
    if (mpfr_cmp(a.hi_, b.lo_) < 0) return Cmp::Less;
    if (mpfr_cmp(a.lo_, b.hi_) > 0) return Cmp::Greater;
    if (mpfr_cmp(a.lo_, a.hi_) == 0 && mpfr_cmp(b.lo_, b.hi_) == 0 &&
        mpfr_cmp(a.lo_, b.lo_) == 0)
      return Cmp::Equal;
    return Cmp::Indeterminate;
  }

  // value < x certainly / value > x certainly, with exact rational x.
  bool certainly_less(const Rational& x) const { return mpfr_cmp_q(hi_, x.raw().get_mpq_t()) < 0; }
  bool certainly_greater(const Rational& x) const { return mpfr_cmp_q(lo_, x.raw().get_mpq_t()) > 0; }
  bool certainly_le(const Rational& x) const { return mpfr_cmp_q(hi_, x.raw().get_mpq_t()) <= 0; }
  bool certainly_ge(const Rational& x) const { return mpfr_cmp_q(lo_, x.raw().get_mpq_t()) >= 0; }

  // floor(value) when the enclosure pins it; nullopt when the enclosure
  // straddles an integer (including an upper endpoint that is exactly an
  // integer the true value might or might not attain).
  std::optional<Int> floor_certain() const {
    Int flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
    if (flo != fhi) return std::nullopt;
    if (mpfr_integer_p(hi_) && mpfr_cmp(lo_, hi_) != 0) return std::nullopt;
    return flo;
  }

  // Decimal rendering of the endpoints, rounded outward, so the printed
  // interval still encloses the value.
  std::string to_string(size_t digits = 40) const {
    return "[" + format(lo_, digits, MPFR_RNDD) + ", " + format(hi_, digits, MPFR_RNDU) + "]";
  }

  std::string lo_string(size_t digits = 40) const { return format(lo_, digits, MPFR_RNDD); }
  std::string hi_string(size_t digits = 40) const { return format(hi_, digits, MPFR_RNDU); }

  double mid_double() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
  }

 private:
  static std::string format(const mpfr_t& x, size_t digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t exp;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, x, rnd);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "") + std::string("0.") + d + "e" + std::to_string(exp);
    return out;
  }

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Re-evaluates `eval` at doubling precision until `decide` accepts the
// result or the precision cap is reached; returns the last evaluation.
// Enclosures of exact expressions shrink monotonically under refinement, so
// a still-indeterminate answer at the cap is reported as such, never forced.
inline CertInterval refine(const std::function<CertInterval(mpfr_prec_t)>& eval,
                           const std::function<bool(const CertInterval&)>& decide,
                           mpfr_prec_t start = kDefaultPrecision,
                           mpfr_prec_t cap = kMaxPrecision) {
  CertInterval r = eval(start);
  for (mpfr_prec_t p = start * 2; !decide(r) && p <= cap; p *= 2) r = eval(p);
  return r;
}

inline const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Greater: return "greater";
    default: return "indeterminate";
  }
}

// Enclosure of x^(1/n) for rational x >= 0.
inline CertInterval interval_root(const Rational& x, unsigned long n,
                                  mpfr_prec_t prec = kDefaultPrecision) {
  if (x.sign() < 0) throw HypothesisError("interval_root of negative rational");
  return CertInterval::of(x, prec).root(n);
}

}  // namespace vmvt
