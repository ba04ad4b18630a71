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

#include <optional>
#include <string>

#include "vmvt/exponents.hpp"

// Consequences at the critical exponent: the defect at s = k(k+1)/2, the
// power-sum-chain (Tarry) bound, and the Waring asymptotic-formula bound
// G~(k) <= floor(u1(k)) + 1 together with the constants xi (the real root of
// 6 xi^3 + 3 xi^2 - 1) and C = (5 + 6 xi - 3 xi^2)/(2 + 6 xi).

namespace vmvt {

// Delta with J_{s,k}(X) << X^{s+Delta+eps} at s = k(k+1)/2:
// Delta = k(k+1)/2 - floor(k(k+1)/2 - k/3 - 8 k^(2/3)).
inline Int critical_defect(long k, LargeKOptions opt = {}) {
  if (k < opt.gate) throw HypothesisError("critical_defect requires k >= gate");
  Certificate range = range_t13(k, opt);
  if (const Check* f = range.failing_check())
    throw Error("critical_defect: endpoint " + std::string(verdict_name(f->verdict)));
  return Int(k) * Int(k + 1) / 2 - Int(range.s_total);
}

struct TarryBound {
  long k = 0;
  Int bound;            // k(k+1)/2 + 1: the claimed s, emitted by construction
  Verdict condition = Verdict::Indeterminate;  // s within the degree-(k+1) range
  Rational margin_rational;   // 2(k+1)/3 - 1, the exact part of the margin
  CertInterval margin;        // 2(k+1)/3 - 8 (k+1)^(2/3) - 1
};

// Verifies that s = k(k+1)/2 + 1 lies inside the admissible range
// s <= (k+1)(k+2)/2 - (k+1)/3 - 8 (k+1)^(2/3) at degree k+1, with a
// certified margin. The margin is positive only for k >= 1732; smaller k
// get an honest Fail verdict.
inline TarryBound tarry_bound(long k, mpfr_prec_t prec = kDefaultPrecision) {
  if (k < 2) throw HypothesisError("tarry_bound requires k >= 2");
  TarryBound t;
  t.k = k;
  t.bound = Int(k) * Int(k + 1) / 2 + 1;
  // margin = (k+1)(k+2)/2 - (k+1)/3 - 8(k+1)^(2/3) - (k(k+1)/2 + 1)
  //        = 2(k+1)/3 - 8 (k+1)^(2/3) - 1
  t.margin_rational = Rational(2 * Int(k + 1), Int(3)) - Rational(1);
  Int cb = iroot_floor(Int(k + 1), 3);
  if (int_pow(cb, 3) == Int(k + 1)) {
    // (k+1)^(2/3) is an integer: the margin is exactly rational
    Rational exact = t.margin_rational - Rational(8 * cb * cb);
    t.margin = CertInterval::of(exact, prec);
    t.condition = exact.sign() >= 0 ? Verdict::Pass : Verdict::Fail;
    return t;
  }
  Int cube = Int(k + 1) * Int(k + 1);
  for (mpfr_prec_t p = prec; p <= kMaxPrecision; p *= 2) {
    t.margin = CertInterval::of(t.margin_rational, p) -
               CertInterval::of(8L, p) * CertInterval::of(cube, p).root(3);
    if (t.margin.sign_lo() > 0) {
      t.condition = Verdict::Pass;
      return t;
    }
    if (t.margin.sign_hi() < 0) {
      t.condition = Verdict::Fail;
      return t;
    }
  }
  return t;  // irrational margin unresolved at the precision cap
}

struct WaringParams {
  long k = 0;
  Int t;              // default k^2 - k + 1
  Int v;              // default k(k+1)/2
  long w = 0;         // search variable
  Rational delta_t;   // 0 at t = k^2 - k + 1 (imported hypothesis)
  Rational delta_v;   // rational upper bound for the defect at v
};

// Rational upper bound for k/3 + 8 k^(2/3) + 1, tight to ~2^-(prec/2).
inline Rational defect_upper_bound(long k, mpfr_prec_t prec = kDefaultPrecision) {
  Rational rat = Rational(Int(k), Int(3)) + Rational(1);
  Int cb = iroot_floor(Int(k), 3);
  if (int_pow(cb, 3) == Int(k)) return rat + Rational(8 * cb * cb);
  CertInterval r = CertInterval::of(Int(k) * Int(k), prec).root(3);
  return rat + Rational(8) * r.hi_rational();
}

inline WaringParams waring_params(long k, long w, mpfr_prec_t prec = kDefaultPrecision) {
  WaringParams p;
  p.k = k;
  p.t = Int(k) * Int(k) - Int(k) + 1;
  p.v = Int(k) * Int(k + 1) / 2;
  p.w = w;
  p.delta_t = Rational(0);
  p.delta_v = defect_upper_bound(k, prec);
  return p;
}

// u0 = 2t - (1 - delta_t)(2t - 2v - w(w-1)) / (1 - delta_t + delta_v / w).
// With delta_v an upper bound for the true defect, u0 is an upper bound too
// (the expression is increasing in delta_v on the feasible set).
inline Rational waring_u0(const WaringParams& p) {
  if (p.w < 1 || p.w > p.k - 1) throw HypothesisError("u0 requires 1 <= w <= k-1");
  Rational two_t = Rational(2 * p.t);
  Rational slack = two_t - Rational(2 * p.v) - Rational(Int(p.w) * Int(p.w - 1));
  if (slack.sign() <= 0) throw HypothesisError("u0 requires 2v + w(w-1) < 2t");
  if (p.delta_t >= Rational(1)) throw HypothesisError("u0 requires delta_t < 1");
  Rational one_minus_dt = Rational(1) - p.delta_t;
  Rational denom = one_minus_dt + p.delta_v / Rational(p.w);
  return two_t - one_minus_dt * slack / denom;
}

struct WaringBound {
  long k = 0;
  Rational u1;        // min over feasible w of u0
  long w_star = 0;    // smallest minimiser
  Int gtilde_bound;   // floor(u1) + 1
  Rational delta_v;   // the defect bound used
};

// Minimum of u0 over integer w in [1, k-1] meeting the constraints, with
// t = k^2 - k + 1 (defect 0, imported hypothesis) and v = k(k+1)/2. Ties go
// to the smaller w.
inline WaringBound waring_u1(long k, LargeKOptions opt = {}) {
  if (k < opt.gate) throw HypothesisError("waring_u1 requires k >= gate");
  WaringBound out;
  out.k = k;
  std::optional<Rational> best;
  WaringParams p = waring_params(k, 1, opt.precision);
  out.delta_v = p.delta_v;
  for (long w = 1; w <= k - 1; ++w) {
    p.w = w;
    Rational slack = Rational(2 * p.t) - Rational(2 * p.v) - Rational(Int(w) * Int(w - 1));
    if (slack.sign() <= 0) continue;
    Rational u0 = waring_u0(p);
    if (!best || u0 < *best) {
      best = u0;
      out.w_star = w;
    }
  }
  if (!best) throw HypothesisError("waring_u1: empty feasible set");
  out.u1 = *best;
  out.gtilde_bound = out.u1.floor() + 1;
  return out;
}

struct XiConstants {
  CertInterval xi;  // real root of 6 x^3 + 3 x^2 - 1 in (0, 1)
  CertInterval C;   // (5 + 6 xi - 3 xi^2)/(2 + 6 xi)
};

// Sign-change bisection with exact rational polynomial evaluation at dyadic
// points; the enclosure of xi always straddles a sign change, and C is
// evaluated on it with directed rounding. Both enclosures are narrower than
// 2^(-precision+8).
inline XiConstants xi_and_C(mpfr_prec_t precision = kDefaultPrecision) {
  if (precision < 64) throw HypothesisError("xi_and_C requires precision >= 64");
  auto f = [](const Rational& x) {
    return Rational(6) * x.pow(3) + Rational(3) * x.pow(2) - Rational(1);
  };
  Rational lo(0), hi(1);
  if (!(f(lo).sign() < 0 && f(hi).sign() > 0))
    throw ContractViolation("no sign change on [0, 1]");
  for (mpfr_prec_t i = 0; i < precision + 16; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    int s = f(mid).sign();
    if (s == 0) {  // exact rational root: pin both endpoints
      lo = hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  mpfr_prec_t work = precision + 32;
  XiConstants out;
  out.xi = CertInterval::hull(lo, hi, work);
  const CertInterval& x = out.xi;
  CertInterval num = CertInterval::of(5L, work) + CertInterval::of(6L, work) * x -
                     CertInterval::of(3L, work) * x * x;
  CertInterval den = CertInterval::of(2L, work) + CertInterval::of(6L, work) * x;
  out.C = num / den;
  return out;
}

}  // namespace vmvt
