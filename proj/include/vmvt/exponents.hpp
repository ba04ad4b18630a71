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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmvt/arith/arith.hpp"

// Admissible-exponent certification for the Vinogradov system
//
//   x_1^j + ... + x_s^j = y_1^j + ... + y_s^j   (1 <= j <= k).
//
// A pair (s, k) is "admissible" when J_{s,k}(X) << X^{s+eps} is certified by
// one of the implemented criteria. The central criterion works with an
// integral depth parameter r and the exact rational data
//
//   Delta(r, s) = sum_{m=1}^{r-1} m(r-m)/(s-m),
//   alpha = kr - r(r-1)/2 - Delta,     beta = r*(r(r-1)/2 + Delta),
//
// and certifies J_{s+r} for  max{2r-1, r(r-1)/2 + Delta} <= s < theta_plus,
// where theta_plus is the larger root of theta^2 - alpha*theta + beta = 0.
// The threshold test s < theta_plus is decided exactly through the quadratic
// rearrangement; margins in the D(k) table are as small as ~0.03, so no
// epsilon appears anywhere in this module.

namespace vmvt {

struct IterationParams {
  long k;  // degree, >= 3
  long r;  // multigrade depth, >= 1
  long s;  // exponent index, >= 1
};

// r0(k) = k - ceil(2*sqrt(k)) + 2, the largest depth the multigrade
// criterion admits. Off-by-one sensitive; decided with exact integer roots.
inline long depth_cap(long k) {
  if (k < 4) throw HypothesisError("depth_cap requires k >= 4");
  return to_long(Int(k) - ceil_two_sqrt(Int(k)) + 2);
}

// Delta(r, s) = sum_{m=1}^{r-1} m(r-m)/(s-m), or with denominators
// (s - r - m) in the shifted variant used for self-referential ranges.
inline Rational delta_sum(long r, long s, bool shifted = false) {
  if (r < 1) throw HypothesisError("delta_sum requires r >= 1");
  Rational acc(0);
  for (long m = 1; m <= r - 1; ++m) {
    long den = shifted ? s - r - m : s - m;
    if (den <= 0) throw HypothesisError("delta_sum denominator not positive");
    acc += Rational(Int(m) * Int(r - m), Int(den));
  }
  return acc;
}

struct ThetaData {
  long k = 0, r = 0, s = 0;
  Rational delta;         // Delta(r, s)
  Rational alpha;         // kr - r(r-1)/2 - Delta
  Rational beta;          // r*(r(r-1)/2 + Delta)
  Rational discriminant;  // alpha^2 - 4*beta

  // Exact enclosure of theta_plus = (alpha + sqrt(disc))/2, for reporting.
  CertInterval theta_plus(mpfr_prec_t prec = kDefaultPrecision) const {
    CertInterval a = CertInterval::of(alpha, prec);
    CertInterval d = CertInterval::of(discriminant, prec);
    return (a + d.sqrt()) / CertInterval::of(2L, prec);
  }
};

inline ThetaData theta_data(const IterationParams& p) {
  ThetaData t;
  t.k = p.k;
  t.r = p.r;
  t.s = p.s;
  t.delta = delta_sum(p.r, p.s);
  Rational half_rr1(Int(p.r) * Int(p.r - 1), Int(2));
  t.alpha = Rational(Int(p.k) * Int(p.r)) - half_rr1 - t.delta;
  t.beta = Rational(p.r) * (half_rr1 + t.delta);
  t.discriminant = t.alpha * t.alpha - Rational(4) * t.beta;
  return t;
}

// s < theta_plus, decided exactly:
//   disc < 0            -> false (no real threshold is claimed),
//   2s - alpha < 0      -> true,
//   otherwise           -> (2s - alpha)^2 < disc.
inline bool below_theta_plus(long s, const ThetaData& t) {
  if (t.discriminant.sign() < 0) return false;
  Rational gap = Rational(2 * s) - t.alpha;
  if (gap.sign() < 0) return true;
  return gap * gap < t.discriminant;
}

// ---------------------------------------------------------------------------
// Certificates

enum class Theorem { Hua, FW2013, T1_1, T9_2, T11_8, C1_2, T1_3 };

inline const char* theorem_tag(Theorem t) {
  switch (t) {
    case Theorem::Hua: return "Hua";
    case Theorem::FW2013: return "FW2013";
    case Theorem::T1_1: return "T1_1";
    case Theorem::T9_2: return "T9_2";
    case Theorem::T11_8: return "T11_8";
    case Theorem::C1_2: return "C1_2";
    case Theorem::T1_3: return "T1_3";
  }
  return "?";
}

enum class Verdict { Pass, Fail, Indeterminate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "indeterminate";
  }
}

struct Check {
  std::string name;
  std::string detail;  // the exact (or interval) values that decided it
  Verdict verdict = Verdict::Indeterminate;
};

// A verdict for (k, r, s) under a named criterion. `s_total` is the index of
// the mean value actually certified: s_core + r for the multigrade criteria
// (which bound J_{s+r}), s_core for the closed ranges and baselines.
struct Certificate {
  Theorem theorem = Theorem::T9_2;
  long k = 0;
  std::optional<long> r;
  long s_core = 0;
  long s_total = 0;
  std::vector<Check> checks;
  bool admissible = false;
  bool hypothesis_met = true;  // structural hypotheses (depth cap, k-gates)
  std::string note;

  const Check* failing_check() const {
    for (const auto& c : checks)
      if (c.verdict != Verdict::Pass) return &c;
    return nullptr;
  }
};

namespace detail {
inline void add_check(Certificate& c, std::string name, std::string det, bool ok) {
  c.checks.push_back({std::move(name), std::move(det), ok ? Verdict::Pass : Verdict::Fail});
}
inline void finalize(Certificate& c) {
  c.admissible = true;
  for (const auto& ch : c.checks)
    if (ch.verdict != Verdict::Pass) c.admissible = false;
}
}  // namespace detail

// Multigrade criterion at explicit depth r: certifies J_{s+r,k}(X) << X^{s+r+eps}
// when (i) 2 <= r <= r0(k), (ii) s >= 2r-1, (iii) s >= r(r-1)/2 + Delta,
// (iv) s < theta_plus. All four checks are recorded with exact values.
inline Certificate certify_t92(long k, long r, long s) {
  Certificate cert;
  cert.theorem = Theorem::T9_2;
  cert.k = k;
  cert.r = r;
  cert.s_core = s;
  cert.s_total = s + r;

  bool k_ok = k >= 4;
  detail::add_check(cert, "k_ge_4", "k = " + std::to_string(k), k_ok);
  bool r_lo = r >= 2;
  detail::add_check(cert, "r_ge_2", "r = " + std::to_string(r), r_lo);
  if (!k_ok || !r_lo) {
    cert.hypothesis_met = false;
    detail::finalize(cert);
    return cert;
  }

  long rcap = depth_cap(k);
  bool r_hi = r <= rcap;
  detail::add_check(cert, "r_le_r0",
                    "r = " + std::to_string(r) + ", r0(k) = " + std::to_string(rcap), r_hi);
  cert.hypothesis_met = r_hi;

  bool s_window = s >= 2 * r - 1;
  detail::add_check(cert, "s_ge_2r_minus_1",
                    "s = " + std::to_string(s) + ", 2r-1 = " + std::to_string(2 * r - 1),
                    s_window);

  if (s <= r - 1) {
    cert.checks.push_back({"delta_defined",
                           "s = " + std::to_string(s) + " <= r-1; Delta(r,s) undefined",
                           Verdict::Fail});
    detail::finalize(cert);
    return cert;
  }

  ThetaData t = theta_data({k, r, s});
  Rational floor_bound = Rational(Int(r) * Int(r - 1), Int(2)) + t.delta;
  bool s_floor = Rational(s) >= floor_bound;
  detail::add_check(cert, "s_ge_rr1_half_plus_delta",
                    "s = " + std::to_string(s) + ", r(r-1)/2 + Delta = " + floor_bound.to_string(),
                    s_floor);

  bool below = below_theta_plus(s, t);
  std::string det;
  if (t.discriminant.sign() < 0) {
    det = "disc = " + t.discriminant.to_string() + " < 0";
  } else {
    Rational gap = Rational(2 * s) - t.alpha;
    det = "(2s - alpha)^2 = " + (gap * gap).to_string() +
          (below ? " < " : " >= ") + "disc = " + t.discriminant.to_string() +
          " (alpha = " + t.alpha.to_string() + ", beta = " + t.beta.to_string() +
          ", theta_plus ~ " + t.theta_plus().to_string(8) + ")";
  }
  cert.checks.push_back({"s_lt_theta_plus", det, below ? Verdict::Pass : Verdict::Fail});

  detail::finalize(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// Large-k criterion at depth r = k - ceil(k^(1/3))

struct LargeKOptions {
  long gate = 20;  // smallest k accepted as "large"
  mpfr_prec_t precision = kDefaultPrecision;
};

struct LargeKData {
  long r = 0;      // k - ceil(k^(1/3))
  long ell = 0;    // ceil(k^(1/3))
  Rational alpha_rat;   // k(k+1)/2 - k/3  (exact part of alpha)
  Rational beta_rat;    // k(k-1)/2        (exact part of beta)
  // alpha = alpha_rat - 3k^(2/3), beta = beta_rat + 3k^(5/3): interval-valued.
  CertInterval alpha(mpfr_prec_t prec) const {
    Int k2 = Int(k_) * Int(k_);
    return CertInterval::of(alpha_rat, prec) -
           CertInterval::of(3L, prec) * CertInterval::of(k2, prec).root(3);
  }
  CertInterval beta(mpfr_prec_t prec) const {
    Int k5 = int_pow(Int(k_), 5);
    return CertInterval::of(beta_rat, prec) +
           CertInterval::of(3L, prec) * CertInterval::of(k5, prec).root(3);
  }
  CertInterval discriminant(mpfr_prec_t prec) const {
    CertInterval a = alpha(prec);
    return a * a - CertInterval::of(4 * Int(r), prec) * beta(prec);
  }
  // Hypothesis: the discriminant has been certified nonnegative.
  CertInterval theta_plus(mpfr_prec_t prec) const {
    return (alpha(prec) + discriminant(prec).sqrt_nonneg()) / CertInterval::of(2L, prec);
  }
  long k_ = 0;
};

inline LargeKData large_k_data(long k) {
  LargeKData d;
  d.k_ = k;
  d.ell = to_long(ceil_cbrt(Int(k)));
  d.r = k - d.ell;
  d.alpha_rat = Rational(Int(k) * Int(k + 1), Int(2)) - Rational(Int(k), Int(3));
  d.beta_rat = Rational(Int(k) * Int(k - 1), Int(2));
  return d;
}

// Certifies J_{s+r,k}(X) << X^{s+r+eps} for s <= s1, where s1 is the larger
// root of theta^2 - alpha*theta + r*beta with the cube-root alpha, beta
// above. The comparison is certified with directed-rounding enclosures and
// automatic precision escalation; an enclosure overlap that survives the
// escalation cap is reported as Indeterminate, never silently resolved.
inline Certificate certify_t11(long k, long s, LargeKOptions opt = {}) {
  Certificate cert;
  cert.theorem = Theorem::T11_8;
  cert.k = k;
  cert.s_core = s;

  LargeKData d = large_k_data(k);
  cert.r = d.r;
  cert.s_total = s + d.r;

  bool gate_ok = k >= opt.gate;
  detail::add_check(cert, "k_ge_gate",
                    "k = " + std::to_string(k) + ", gate = " + std::to_string(opt.gate), gate_ok);
  cert.hypothesis_met = gate_ok;

  Verdict verdict = Verdict::Indeterminate;
  std::string det;
  for (mpfr_prec_t p = opt.precision; p <= kMaxPrecision; p *= 2) {
    CertInterval disc = d.discriminant(p);
    if (disc.sign_hi() < 0) {
      verdict = Verdict::Fail;
      det = "disc < 0 certainly: disc in " + disc.to_string(12) + "; no real threshold";
      break;
    }
    if (disc.sign_lo() < 0) continue;  // straddles zero: refine
    CertInterval gap = CertInterval::of(Rational(2 * s), p) - d.alpha(p);
    CertInterval gap2 = gap * gap;
    CertInterval s1 = d.theta_plus(p);
    det = "s = " + std::to_string(s) + ", s1 in " + s1.to_string(12);
    if (gap.sign_hi() < 0 || compare(gap2, disc) == Cmp::Less) {
      verdict = Verdict::Pass;
      break;
    }
    if (gap.sign_lo() > 0 && compare(gap2, disc) == Cmp::Greater) {
      verdict = Verdict::Fail;
      break;
    }
  }
  if (verdict == Verdict::Indeterminate) {
    cert.note = "indeterminate at precision cap";
    if (det.empty()) det = "enclosures overlap at precision cap";
  }
  cert.checks.push_back({"s_le_s1", det, verdict});
  detail::finalize(cert);
  return cert;
}

// Largest s certified by certify_t11 at this k, i.e. floor(s1), located by
// interval bisection on integers around the enclosure of s1.
inline std::optional<long> t11_max_s(long k, LargeKOptions opt = {}) {
  LargeKData d = large_k_data(k);
  mpfr_prec_t p = opt.precision;
  for (;; p *= 2) {
    CertInterval disc = d.discriminant(p);
    if (disc.sign_hi() < 0) return std::nullopt;  // no real threshold
    if (disc.sign_lo() >= 0) break;
    if (p >= kMaxPrecision) return std::nullopt;  // sign unresolved at cap
  }
  CertInterval s1 =
      refine([&](mpfr_prec_t q) { return d.theta_plus(q); },
             [](const CertInterval& r) { return r.floor_certain().has_value(); }, p);
  auto fl = s1.floor_certain();
  if (!fl) return std::nullopt;
  return to_long(*fl);
}

// ---------------------------------------------------------------------------
// Closed admissible ranges and baselines

// Reference values for the exponent D(k), 4 <= k <= 20, used by the table
// command's comparison column.
inline const std::map<long, long>& reference_d_table() {
  static const std::map<long, long> table = {
      {4, 8},    {5, 10},   {6, 17},   {7, 20},   {8, 29},   {9, 38},
      {10, 44},  {11, 55},  {12, 68},  {13, 75},  {14, 90},  {15, 105},
      {16, 122}, {17, 132}, {18, 151}, {19, 170}, {20, 191}};
  return table;
}

inline Certificate baseline_hua(long k) {
  Certificate c;
  c.theorem = Theorem::Hua;
  c.k = k;
  c.s_core = c.s_total = k + 1;
  detail::add_check(c, "baseline", "s <= k + 1 = " + std::to_string(k + 1), true);
  detail::finalize(c);
  return c;
}

inline Certificate baseline_fw2013(long k) {
  Certificate c;
  c.theorem = Theorem::FW2013;
  c.k = k;
  Int smax = (Int(k + 1) * Int(k + 1)) / 4;  // floor((k+1)^2 / 4)
  c.s_core = c.s_total = to_long(smax);
  detail::add_check(c, "baseline", "s <= floor((k+1)^2/4) = " + to_string(smax), true);
  detail::finalize(c);
  return c;
}

// s <= k(k+1)/2 - 7k/3 (k >= 7).
inline Certificate range_c12(long k) {
  Certificate c;
  c.theorem = Theorem::C1_2;
  c.k = k;
  bool gate = k >= 7;
  detail::add_check(c, "k_ge_7", "k = " + std::to_string(k), gate);
  c.hypothesis_met = gate;
  if (!gate) {
    c.note = "KTooSmall";
    detail::finalize(c);
    return c;
  }
  Rational endpoint = Rational(Int(k) * Int(k + 1), Int(2)) - Rational(7 * Int(k), Int(3));
  c.s_core = c.s_total = to_long(endpoint.floor());
  detail::add_check(c, "endpoint",
                    "s <= floor(k(k+1)/2 - 7k/3) = floor(" + endpoint.to_string() + ") = " +
                        std::to_string(c.s_total),
                    true);
  detail::finalize(c);
  return c;
}

// s <= k(k+1)/2 - k/3 - 8k^(2/3) (k past the large-k gate). The endpoint is
// rational when k is a perfect cube and is floored exactly; otherwise it is
// floored through a certified enclosure with precision escalation.
inline Certificate range_t13(long k, LargeKOptions opt = {}) {
  Certificate c;
  c.theorem = Theorem::T1_3;
  c.k = k;
  bool gate = k >= opt.gate;
  detail::add_check(c, "k_ge_gate",
                    "k = " + std::to_string(k) + ", gate = " + std::to_string(opt.gate), gate);
  c.hypothesis_met = gate;
  if (!gate) {
    c.note = "KTooSmall";
    detail::finalize(c);
    return c;
  }
  Rational rat = Rational(Int(k) * Int(k + 1), Int(2)) - Rational(Int(k), Int(3));
  Int cb = iroot_floor(Int(k), 3);
  if (int_pow(cb, 3) == Int(k)) {
    Rational endpoint = rat - Rational(8 * cb * cb);
    c.s_core = c.s_total = to_long(endpoint.floor());
    detail::add_check(c, "endpoint",
                      "s <= floor(" + endpoint.to_string() + ") = " + std::to_string(c.s_total),
                      true);
  } else {
    Int k2 = Int(k) * Int(k);
    auto eval = [&](mpfr_prec_t p) {
      return CertInterval::of(rat, p) -
             CertInterval::of(8L, p) * CertInterval::of(k2, p).root(3);
    };
    CertInterval endpoint = refine(eval, [](const CertInterval& r) {
      return r.floor_certain().has_value();
    }, opt.precision);
    auto fl = endpoint.floor_certain();
    if (!fl) {
      c.checks.push_back({"endpoint", "interval floor indeterminate at precision cap",
                          Verdict::Indeterminate});
      detail::finalize(c);
      return c;
    }
    c.s_core = c.s_total = to_long(*fl);
    detail::add_check(c, "endpoint",
                      "s <= floor of " + endpoint.to_string(20) + " = " + std::to_string(c.s_total),
                      true);
  }
  detail::finalize(c);
  return c;
}

// Self-referential closed range at depth r0(k):
// largest s with s <= kr - r(r-1)/2 - Delta_shifted(r, s), r = r0(k), k >= 7.
inline Certificate range_t1_1(long k) {
  Certificate c;
  c.theorem = Theorem::T1_1;
  c.k = k;
  bool gate = k >= 7;
  detail::add_check(c, "k_ge_7", "k = " + std::to_string(k), gate);
  c.hypothesis_met = gate;
  if (!gate) {
    c.note = "KTooSmall";
    detail::finalize(c);
    return c;
  }
  long r = depth_cap(k);
  c.r = r;
  Rational cap = Rational(Int(k) * Int(r)) - Rational(Int(r) * Int(r - 1), Int(2));
  long best = 0;
  bool contiguous = true;
  for (long s = 2 * r; s <= k * r; ++s) {
    Rational d = delta_sum(r, s, /*shifted=*/true);
    if (Rational(s) <= cap - d) {
      if (best != 0 && s != best + 1) contiguous = false;
      best = s;
    }
  }
  c.s_core = c.s_total = best;
  detail::add_check(c, "endpoint",
                    "max s with s + Delta_shifted(r, s) <= " + cap.to_string() + " at r = " +
                        std::to_string(r) + " is " + std::to_string(best),
                    best > 0);
  if (!contiguous) c.note = "admissible set not contiguous";
  detail::finalize(c);
  return c;
}

inline std::vector<Certificate> closed_ranges(long k, LargeKOptions opt = {}) {
  return {range_t1_1(k), range_c12(k), range_t13(k, opt)};
}

// ---------------------------------------------------------------------------
// Best-bound search (the D(k) optimization)

struct RPolicy {
  bool restricted_to_r0 = true;
  long lo = 2, hi = 0;  // used when !restricted_to_r0
};

struct BestBoundOptions {
  RPolicy policy;
  bool include_t11 = false;
  LargeKOptions large_k;
};

// For fixed (k, r): the largest s with every certify_t92 inequality check
// passing, ignoring the depth-cap check when `ignore_cap` (used to explain
// reference-table rows from outside the certified range).
inline std::optional<Certificate> best_s_at_depth(long k, long r, bool ignore_cap) {
  std::optional<Certificate> best;
  for (long s = std::max(2 * r - 1, r); s <= k * r + 1; ++s) {
    Certificate cand = certify_t92(k, r, s);
    bool ok = true;
    for (const auto& ch : cand.checks) {
      if (ignore_cap && ch.name == "r_le_r0") continue;
      if (ch.verdict != Verdict::Pass) ok = false;
    }
    if (ok) {
      if (ignore_cap && !cand.hypothesis_met) {
        cand.admissible = false;
        cand.note = "depth outside the certified range; inequality checks only";
      }
      best = cand;
    }
  }
  return best;
}

// Maximum certified s_total over the depth policy, folding in the two
// baseline ranges so the result always states the best bound this toolchain
// knows, with provenance. Ties go to the multigrade certificate with the
// smallest achieving r.
inline Certificate best_bound(long k, BestBoundOptions opt = {}) {
  if (k < 4) throw HypothesisError("best_bound requires k >= 4");
  long rlo = opt.policy.restricted_to_r0 ? 2 : opt.policy.lo;
  long rhi = opt.policy.restricted_to_r0 ? depth_cap(k) : opt.policy.hi;

  std::optional<Certificate> best;
  for (long r = rlo; r <= rhi; ++r) {
    auto cand = best_s_at_depth(k, r, /*ignore_cap=*/!opt.policy.restricted_to_r0);
    if (!cand) continue;
    if (!best || cand->s_total > best->s_total) best = cand;
  }

  auto consider = [&](const Certificate& c) {
    if (!c.admissible) return;
    if (!best || c.s_total > best->s_total) best = c;
  };
  consider(baseline_fw2013(k));
  consider(baseline_hua(k));
  if (opt.include_t11 && k >= opt.large_k.gate) {
    if (auto smax = t11_max_s(k, opt.large_k)) {
      Certificate c = certify_t11(k, *smax, opt.large_k);
      consider(c);
    }
  }
  return *best;
}

// One row of the D(k) table comparison.
struct TableRow {
  long k = 0;
  Certificate best;                      // under the requested policy
  std::optional<long> d_reference;  // published reference value
  bool match = false;
  // For discrepancies: per-depth blocking inequality at s_core = D_ref - r,
  // and (when one exists) an out-of-hypothesis depth that reproduces D_ref.
  std::vector<Check> blocking;
  std::optional<Certificate> unrestricted;
};

inline TableRow table_row(long k, BestBoundOptions opt = {}) {
  TableRow row;
  row.k = k;
  row.best = best_bound(k, opt);
  const auto& ref = reference_d_table();
  auto it = ref.find(k);
  if (it == ref.end()) return row;
  row.d_reference = it->second;
  row.match = row.best.s_total == it->second;
  if (row.match) return row;

  long target = it->second;
  for (long r = 2; r <= depth_cap(k); ++r) {
    long s = target - r;
    if (s < 1) continue;
    Certificate c = certify_t92(k, r, s);
    if (const Check* f = c.failing_check()) {
      Check b = *f;
      b.name = "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ":" + b.name;
      row.blocking.push_back(std::move(b));
    }
  }
  for (long r = depth_cap(k) + 1; r <= k - 1; ++r) {
    long s = target - r;
    if (s < 1) continue;
    Certificate c = certify_t92(k, r, s);
    bool ineq_ok = true;
    for (const auto& ch : c.checks)
      if (ch.name != "r_le_r0" && ch.verdict != Verdict::Pass) ineq_ok = false;
    if (ineq_ok) {
      c.admissible = false;
      c.note = "reproduces the reference value with r > r0(k); inequality checks only";
      row.unrestricted = c;
      break;
    }
  }
  return row;
}

inline std::vector<TableRow> table_scan(long kmin, long kmax,
                                        BestBoundOptions opt = {}) {
  if (kmin < 4 || kmin > kmax) throw HypothesisError("table requires 4 <= kmin <= kmax");
  std::vector<TableRow> rows;
  for (long k = kmin; k <= kmax; ++k) rows.push_back(table_row(k, opt));
  return rows;
}

}  // namespace vmvt
