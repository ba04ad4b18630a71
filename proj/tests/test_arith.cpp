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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vmvt/arith/arith.hpp"

using namespace vmvt;

namespace {

Rational random_rational(std::mt19937_64& rng, long max_abs = 1000000) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(Int(num(rng)), Int(den(rng)));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 13) + Rational(1, 6) == Rational(25, 78));
  CHECK(Rational(1) * Rational(-7, 3) == Rational(-7, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DivisionByZero);

  // canonical form
  Rational q(Int(-6), Int(-4));
  CHECK(q.numerator() == 3);
  CHECK(q.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);

  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(25, 78).to_string() == "25/78");
}

TEST_CASE("rational ring properties on random values") {
  std::mt19937_64 rng(20260810);
  for (int i = 0; i < 10000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK((a + b) == (b + a));
    // canonical after arithmetic
    Rational c = a * b + a - b;
    Int num = c.numerator(), den = c.denominator(), g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    CHECK(g == 1);
    CHECK(den >= 1);
  }
}

TEST_CASE("integer roots") {
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(48)) == 6);
  CHECK(isqrt_ceil(Int(48)) == 7);
  CHECK(isqrt_ceil(Int(49)) == 7);
  CHECK(ceil_two_sqrt(Int(4)) == 4);
  CHECK(ceil_two_sqrt(Int(7)) == 6);   // 2*sqrt(7) = 5.29...
  CHECK(ceil_two_sqrt(Int(16)) == 8);  // exact square
  CHECK(ceil_cbrt(Int(27)) == 3);
  CHECK(ceil_cbrt(Int(28)) == 4);
  CHECK(iroot_floor(Int(1000000), 3) == 100);
  CHECK_THROWS_AS(isqrt_floor(Int(-1)), HypothesisError);
}

TEST_CASE("quadext comparisons from the examples") {
  QuadExt sqrt2(Int(2), Rational(0), Rational(1));
  CHECK(sqrt2 < QuadExt(Rational(3, 2)));

  QuadExt x(Int(5), Rational(2, 3), Rational(0));
  CHECK(x == QuadExt(Rational(2, 3)));

  // 7 - sqrt(5) ~ 4.764 vs 4 + sqrt(5) ~ 6.236
  QuadExt lhs(Int(5), Rational(7), Rational(-1));
  QuadExt rhs(Int(5), Rational(4), Rational(1));
  CHECK(lhs < rhs);

  // 60-digit evaluation oracle for the same comparison
  CertInterval gap = to_interval(rhs - lhs, 200);
  CHECK(gap.certainly_greater(Rational(0)));
}

TEST_CASE("quadext field arithmetic") {
  QuadExt a(Int(7), Rational(3, 2), Rational(-5, 4));
  QuadExt b(Int(7), Rational(-1, 3), Rational(2));
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / QuadExt(Rational(0)), DivisionByZero);

  // conjugate product is rational: (x + y sqrt(D))(x - y sqrt(D)) = x^2 - y^2 D
  QuadExt conj(Int(7), Rational(3, 2), Rational(5, 4));
  QuadExt prod = a * conj;
  CHECK(prod.is_rational());
  CHECK(prod.as_rational() == Rational(9, 4) - Rational(25, 16) * Rational(7));

  // perfect-square radicand folds into the rational part
  QuadExt folded(Int(9), Rational(1, 2), Rational(1, 3));
  CHECK(folded.is_rational());
  CHECK(folded.as_rational() == Rational(3, 2));

  QuadExt other(Int(3), Rational(0), Rational(1));
  CHECK_THROWS_AS(a + other, RadicandMismatch);

  // 1/sqrt(k) round trip: sqrt_of(1/k) * sqrt_of(k) == 1
  QuadExt inv_sqrt = QuadExt::sqrt_of(Rational(1, 7));
  QuadExt sqrt7 = QuadExt::sqrt_of(Rational(7));
  CHECK(inv_sqrt * sqrt7 == QuadExt(Rational(1)));
}

TEST_CASE("quadext sign agrees with 100-digit evaluation") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> dpick(0, 4);
  const long radicands[] = {2, 3, 5, 7, 11};
  const Rational tiny(Int(1), int_pow(Int(10), 50));
  for (int i = 0; i < 2000; ++i) {
    long d = radicands[dpick(rng)];
    QuadExt a(Int(d), random_rational(rng, 1000), random_rational(rng, 1000));
    QuadExt b(Int(d), random_rational(rng, 1000), random_rational(rng, 1000));
    CertInterval gap = to_interval(a - b, 340);  // > 100 decimal digits
    if (gap.certainly_greater(tiny)) {
      CHECK(a > b);
    } else if (gap.certainly_less(-tiny)) {
      CHECK(a < b);
    }
  }
}

TEST_CASE("interval_root examples") {
  CertInterval r8 = interval_root(Rational(8), 3);
  CHECK(r8.contains(Rational(2)));

  CertInterval r1 = interval_root(Rational(1), 5);
  CHECK(r1.contains(Rational(1)));
  CHECK(r1.width() == Rational(0));

  // long-division square root oracle: isqrt(2 * 10^80) gives the first 40
  // decimal digits of sqrt(2)
  Int scale = int_pow(Int(10), 40);
  Int digits = isqrt_floor(Int(2) * scale * scale);
  Rational lo_oracle(digits, scale), hi_oracle(digits + 1, scale);
  CertInterval r2 = interval_root(Rational(2), 2);
  CHECK(!r2.certainly_less(lo_oracle));
  CHECK(!r2.certainly_greater(hi_oracle));
  CHECK(r2.width() < Rational(Int(1), int_pow(Int(2), 200)));

  CHECK_THROWS_AS(interval_root(Rational(-1), 2), HypothesisError);

  // width contract: <= 2^(1-prec) * max(1, x)
  for (long x : {2L, 3L, 10L, 1000L}) {
    CertInterval r = interval_root(Rational(x), 3, 128);
    CHECK(r.width() <= Rational(Int(x)) / Rational(int_pow(Int(2), 127)));
  }
}

TEST_CASE("interval arithmetic is conservative") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 2000; ++i) {
    Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
    Rational c = random_rational(rng, 1000);
    Rational exact = a * b + c - a * c;
    CertInterval ia = CertInterval::of(a, 64), ib = CertInterval::of(b, 64),
                 ic = CertInterval::of(c, 64);
    CertInterval enc = ia * ib + ic - ia * ic;
    CHECK(enc.contains(exact));
    if (!b.is_zero()) {
      Rational q = a / b;
      bool divisor_safe = CertInterval::of(b, 64).sign_lo() > 0 ||
                          CertInterval::of(b, 64).sign_hi() < 0;
      if (divisor_safe) CHECK((ia / ib).contains(q));
    }
  }
}

TEST_CASE("interval comparisons and refinement") {
  CertInterval a = CertInterval::of(Rational(1, 3), 64);
  CertInterval b = CertInterval::of(Rational(1, 2), 64);
  CHECK(compare(a, b) == Cmp::Less);
  CHECK(compare(b, a) == Cmp::Greater);
  CHECK(compare(a, a) == Cmp::Indeterminate);  // overlapping non-point enclosures

  // refinement never widens: sqrt(2) at doubling precision
  Rational prev_width(-1);
  for (mpfr_prec_t p = 64; p <= 1024; p *= 2) {
    Rational w = interval_root(Rational(2), 2, p).width();
    if (prev_width.sign() >= 0) CHECK(w <= prev_width);
    prev_width = w;
  }

  // cube root of 8 is exactly representable: a point enclosure at 2
  CHECK(*interval_root(Rational(8), 3).floor_certain() == 2);
}

TEST_CASE("floor_certain semantics") {
  // an enclosure strictly inside (1, 2) pins floor = 1
  CertInterval in = CertInterval::hull(Rational(3, 2), Rational(7, 4));
  CHECK(*in.floor_certain() == 1);
  // an enclosure straddling 2 cannot pin the floor
  CertInterval straddle = CertInterval::hull(Rational(15, 8), Rational(17, 8));
  CHECK(!straddle.floor_certain().has_value());
  // upper endpoint exactly an integer: the true value might be 2 (floor 2)
  // or below (floor 1): not pinned
  CertInterval touch = CertInterval::hull(Rational(15, 8), Rational(2));
  CHECK(!touch.floor_certain().has_value());
  // a point interval at an integer is pinned
  CertInterval point = CertInterval::of(Rational(2));
  CHECK(*point.floor_certain() == 2);
}
