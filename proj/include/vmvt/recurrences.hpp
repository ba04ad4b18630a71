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
#include <utility>
#include <vector>

#include "vmvt/exponents.hpp"

// Sequence machinery behind the multigrade iteration:
//
//   * phi-weights  phi_m = (s-r)/((s-m)(s-m-1)), phi* = (s-r)/s, which
//     telescope to phi* + sum phi_m = 1 and sum phi_m = r/s;
//   * the offset iteration a_n = b_{n-1}, b_n = (k-m_n) b_{n-1} - m_n a_{n-1} + h_n
//     and its zero-offset base pair (atil_n, btil_n);
//   * the weighted sums B_n, A_n with their three-term recurrence
//     s^2 B_{n+2} - s*alpha*B_{n+1} + beta*B_n = 0 and the closed form in
//     theta_plus/theta_minus, computed on two independent routes and
//     compared exactly;
//   * the ell = ceil(k^(1/3)) variant with its pruned index windows
//     u_n, v_n and the exact rational sum defining s0^R.
//
// Everything in the sqrt(k) flavour lives in Q(sqrt(k)) and is compared
// exactly; the cube-root quantities of the large-k variant are handled with
// certified enclosures.

namespace vmvt {

// ---------------------------------------------------------------------------
// phi-weights

struct PhiWeights {
  long r = 0, s = 0;
  std::vector<Rational> phi;  // phi_0 .. phi_{r-1}
  Rational phi_star;
};

inline PhiWeights phi_weights(long r, long s) {
  if (!(s > r && r >= 1)) throw HypothesisError("phi_weights requires s > r >= 1");
  PhiWeights w;
  w.r = r;
  w.s = s;
  for (long m = 0; m <= r - 1; ++m)
    w.phi.push_back(Rational(Int(s - r), Int(s - m) * Int(s - m - 1)));
  w.phi_star = Rational(Int(s - r), Int(s));
  Rational sum(0);
  for (const auto& p : w.phi) sum += p;
  if (w.phi_star + sum != Rational(1))
    throw ContractViolation("phi identity phi* + sum phi_m = 1 failed");
  if (sum != Rational(Int(r), Int(s)))
    throw ContractViolation("phi identity sum phi_m = r/s failed");
  return w;
}

// ---------------------------------------------------------------------------
// Offset iteration

enum class AbFlavor { SqrtK, EllK };

template <class S>
struct TildePair {
  std::vector<S> a;  // atil_0 .. atil_R
  std::vector<S> b;  // btil_0 .. btil_R
};

// Zero-offset base pair: atil_0 = a0, btil_0 = 1,
// atil_n = btil_{n-1}, btil_n = (k - m_n) btil_{n-1} - m_n atil_{n-1}.
template <class S>
TildePair<S> tilde_run(long k, const std::vector<long>& m, const S& a0) {
  TildePair<S> t;
  t.a.push_back(a0);
  t.b.push_back(S(Rational(1)));
  for (size_t n = 0; n < m.size(); ++n) {
    S bn = S(Rational(k - m[n])) * t.b[n] - S(Rational(m[n])) * t.a[n];
    t.a.push_back(t.b[n]);
    t.b.push_back(std::move(bn));
  }
  return t;
}

inline TildePair<QuadExt> tilde_sqrtk(long k, const std::vector<long>& m) {
  // atil_0 = 1/sqrt(k) = sqrt(k)/k
  QuadExt a0 = QuadExt::sqrt_of(Rational(1L, k));
  return tilde_run<QuadExt>(k, m, a0);
}

inline TildePair<Rational> tilde_ellk(long k, const std::vector<long>& m) {
  long ell = to_long(ceil_cbrt(Int(k)));
  return tilde_run<Rational>(k, m, Rational(1L, ell));
}

struct ABSequence {
  long k = 0, r = 0;
  AbFlavor flavor = AbFlavor::SqrtK;
  Int b0;
  std::vector<long> m;  // m_1 .. m_R
  std::vector<Int> h;   // h_1 .. h_R
  std::vector<Int> a;   // a_0 .. a_R
  std::vector<Int> b;   // b_0 .. b_R
};

// Exact offset decomposition: b_n(m; h) = btil_n * b + sum_l c[n][l], where
// c[l][l] = hstar_l, c[n][l] = 0 for n < l, and
// c[n+1][l] = (k - m_{n+1}) c[n][l] - m_{n+1} c[n-1][l] for n >= l.
// hstar_1 = h_1 + m_1*(a0_exact - floor(a0_exact)); hstar_n = h_n otherwise.
template <class S>
std::vector<std::vector<S>> offset_table(long k, const std::vector<long>& m,
                                         const std::vector<S>& hstar) {
  size_t R = m.size();
  std::vector<std::vector<S>> c(R + 1, std::vector<S>(R + 1, S(Rational(0))));
  for (size_t l = 1; l <= R; ++l) {
    c[l][l] = hstar[l - 1];
    for (size_t n = l; n < R; ++n) {
      S prev = (n >= 1 && n - 1 >= l) ? c[n - 1][l] : S(Rational(0));
      c[n + 1][l] = S(Rational(k - m[n])) * c[n][l] - S(Rational(m[n])) * prev;
    }
  }
  return c;
}

// Runs the iteration a_0 = floor(b/ell0), b_0 = b with ell0 = sqrt(k) or
// ell = ceil(k^(1/3)) according to the flavour. Contract checks, performed
// when their hypotheses hold and throwing ContractViolation on failure
// (they encode proven inequalities, so a throw means a bug):
//   * sqrt(k) growth b_{n+1} > sqrt(k) b_n whenever r <= r0(k) (any offsets);
//   * the sandwich btil_n*b <= b_n <= btil_n*b + 16 k^(R+n) b whenever
//     every h_n <= 16 k^R b.
inline ABSequence iterate_ab(long k, long r, const Int& b, std::vector<long> m,
                             std::vector<Int> h, AbFlavor flavor) {
  if (k < 4) throw HypothesisError("iterate_ab requires k >= 4");
  if (b < 1) throw HypothesisError("iterate_ab requires b >= 1");
  if (h.size() != m.size()) throw HypothesisError("m and h lengths differ");
  for (long mi : m)
    if (mi < 0 || mi > r - 1) throw HypothesisError("m_n outside [0, r-1]");
  for (const Int& hi : h)
    if (hi < 0) throw HypothesisError("h_n must be nonnegative");

  ABSequence seq;
  seq.k = k;
  seq.r = r;
  seq.flavor = flavor;
  seq.b0 = b;
  seq.m = std::move(m);
  seq.h = std::move(h);

  Int a0;
  if (flavor == AbFlavor::SqrtK) {
    // floor(b/sqrt(k)) = floor(sqrt(b^2/k)) = isqrt(floor(b^2/k)) for b,k >= 1
    a0 = isqrt_floor(b * b / k);
  } else {
    a0 = b / to_long(ceil_cbrt(Int(k)));
  }
  seq.a.push_back(a0);
  seq.b.push_back(b);
  size_t R = seq.m.size();
  for (size_t n = 0; n < R; ++n) {
    Int bn = Int(k - seq.m[n]) * seq.b[n] - Int(seq.m[n]) * seq.a[n] + seq.h[n];
    seq.a.push_back(seq.b[n]);
    seq.b.push_back(bn);
  }

  if (flavor == AbFlavor::SqrtK && r <= depth_cap(k)) {
    // growth: b_{n+1} > sqrt(k) b_n for every n >= 0
    for (size_t n = 0; n < R; ++n)
      if (!(seq.b[n + 1] > 0 && seq.b[n + 1] * seq.b[n + 1] > Int(k) * seq.b[n] * seq.b[n]))
        throw ContractViolation("sqrt(k)-growth failed at n = " + std::to_string(n));

    Int hcap = 16 * int_pow(Int(k), static_cast<unsigned long>(R)) * b;
    bool h_small = true;
    for (const Int& hi : seq.h)
      if (hi > hcap) h_small = false;
    if (h_small) {
      TildePair<QuadExt> t = tilde_sqrtk(k, seq.m);
      for (size_t n = 1; n <= R; ++n) {
        QuadExt base = t.b[n] * QuadExt(Rational(b));
        QuadExt upper = base + QuadExt(Rational(16 * int_pow(Int(k), static_cast<unsigned long>(R + n)) * b));
        QuadExt bn(Rational(seq.b[n]));
        if (bn < base || bn > upper)
          throw ContractViolation("offset sandwich failed at n = " + std::to_string(n));
      }
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------
// B_n / A_n tables

struct BnAnTable {
  long k = 0, r = 0, s = 0, R = 0;
  ThetaData theta;
  std::vector<QuadExt> B;  // B_1 .. B_R  (index 0 unused)
  std::vector<QuadExt> A;  // A_1 .. A_R
  QuadExt s0_pow_R;        // s^R * B_R
};

namespace detail {

// U_n = (theta_plus^n - theta_minus^n)/(theta_plus - theta_minus), computed
// through actual powers in Q(sqrt(disc)) — an algebraic route independent of
// the coupled recurrence.
inline std::vector<Rational> theta_power_sums(const ThetaData& t, long R) {
  std::vector<Rational> u(static_cast<size_t>(R) + 2, Rational(0));
  if (t.discriminant.sign() < 0)
    throw HypothesisError("discriminant negative; closed form degenerate");
  if (t.discriminant.sign() == 0) {
    // theta_plus = theta_minus = alpha/2; U_n degenerates to n*(alpha/2)^(n-1).
    Rational half_alpha = t.alpha / Rational(2);
    for (long n = 1; n <= R + 1; ++n)
      u[static_cast<size_t>(n)] = Rational(n) * half_alpha.pow(static_cast<unsigned long>(n - 1));
    return u;
  }
  QuadExt root = QuadExt::sqrt_of(t.discriminant);
  QuadExt two_inv(Rational(1L, 2));
  QuadExt tp = (QuadExt(t.alpha) + root) * two_inv;
  QuadExt tm = (QuadExt(t.alpha) - root) * two_inv;
  QuadExt pp(Rational(1)), pm(Rational(1));
  for (long n = 1; n <= R + 1; ++n) {
    pp *= tp;
    pm *= tm;
    QuadExt un = (pp - pm) / root;
    if (!un.is_rational()) throw ContractViolation("theta power sum not rational");
    u[static_cast<size_t>(n)] = un.as_rational();
  }
  return u;
}

}  // namespace detail

// Computes B_n, A_n two ways and asserts exact agreement:
//   (i)  coupled recurrences s B_{n+1} = alpha B_n - (beta/r) A_n,
//        s A_{n+1} = r B_n, from s B_1 = alpha - beta/(r sqrt(k)), s A_1 = r;
//   (ii) closed form s^n B_n = U_{n+1} - (beta/(r sqrt(k))) U_n with the
//        theta-power sums U_n computed in Q(sqrt(disc)).
// Values live in Q(sqrt(k)); for square k everything collapses to exact
// rationals and the comparison is rational equality.
inline BnAnTable bn_table(long k, long r, long s, long R) {
  if (R < 1) throw HypothesisError("bn_table requires R >= 1");
  if (s < 1) throw HypothesisError("bn_table requires s >= 1");
  BnAnTable tab;
  tab.k = k;
  tab.r = r;
  tab.s = s;
  tab.R = R;
  tab.theta = theta_data({k, r, s});

  const Rational inv_s(1L, s);
  const Rational beta_over_r = tab.theta.beta / Rational(r);
  // 1/sqrt(k) = sqrt(k)/k
  const QuadExt inv_sqrt_k = QuadExt::sqrt_of(Rational(1L, k));

  tab.B.assign(static_cast<size_t>(R) + 1, QuadExt());
  tab.A.assign(static_cast<size_t>(R) + 1, QuadExt());
  tab.B[1] = (QuadExt(tab.theta.alpha) - QuadExt(beta_over_r) * inv_sqrt_k) * QuadExt(inv_s);
  tab.A[1] = QuadExt(Rational(Int(r), Int(s)));
  for (long n = 1; n < R; ++n) {
    tab.B[n + 1] = (QuadExt(tab.theta.alpha) * tab.B[n] - QuadExt(beta_over_r) * tab.A[n]) *
                   QuadExt(inv_s);
    tab.A[n + 1] = QuadExt(Rational(r)) * tab.B[n] * QuadExt(inv_s);
  }

  std::vector<Rational> u = detail::theta_power_sums(tab.theta, R);
  Rational s_pow(1);
  for (long n = 1; n <= R; ++n) {
    s_pow *= Rational(s);
    QuadExt closed = QuadExt(u[static_cast<size_t>(n) + 1]) -
                     QuadExt(beta_over_r * u[static_cast<size_t>(n)]) * inv_sqrt_k;
    QuadExt recur = tab.B[static_cast<size_t>(n)] * QuadExt(s_pow);
    if (!(closed == recur))
      throw ContractViolation("closed form disagrees with recurrence at n = " +
                              std::to_string(n));
  }
  tab.s0_pow_R = tab.B[static_cast<size_t>(R)] * QuadExt(s_pow);
  return tab;
}

// Smallest R <= R_max with B_R > 1 (equivalently s^R < s0^R).  Uses only the
// coupled recurrence, so it works outside the closed form's hypotheses.
inline std::optional<long> min_valid_R(long k, long r, long s, long R_max) {
  ThetaData t = theta_data({k, r, s});
  const Rational inv_s(1L, s);
  const Rational beta_over_r = t.beta / Rational(r);
  const QuadExt inv_sqrt_k = QuadExt::sqrt_of(Rational(1L, k));
  QuadExt B = (QuadExt(t.alpha) - QuadExt(beta_over_r) * inv_sqrt_k) * QuadExt(inv_s);
  QuadExt A{Rational(Int(r), Int(s))};
  const QuadExt one{Rational(1)};
  for (long n = 1; n <= R_max; ++n) {
    if (B > one) return n;
    QuadExt Bn = (QuadExt(t.alpha) * B - QuadExt(beta_over_r) * A) * QuadExt(inv_s);
    A = QuadExt(Rational(r)) * B * QuadExt(inv_s);
    B = Bn;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ell = ceil(k^(1/3)) variant

struct TildeSystem {
  long k = 0, R = 0, ell = 0, r = 0;
  std::vector<long> m;              // m_1 .. m_R
  std::vector<Rational> a_tilde;    // atil_0 .. atil_R
  std::vector<Rational> b_tilde;    // btil_0 .. btil_R
  std::vector<Rational> u_tilde;    // util_1 .. util_R
  std::vector<Int> v_tilde;         // vtil_1 .. vtil_R
  Rational k_m;                     // btil_R
  bool in_window = true;            // every m_n <= util_n - 1
  std::optional<Rational> rho_m;    // btil_R * s^R / s0^R, when s was given
};

namespace detail {

struct S0Sums {
  std::vector<Rational> B;  // B_1 .. B_n level sums
  std::vector<Rational> A;
  Int states = 0;
  bool degenerate = false;  // some window was empty
};

// DFS over 0 <= m_i <= vtil_i - 1 accumulating the phi-weighted level sums.
inline void s0_dfs(long k, long R, const PhiWeights& w, long depth, const Rational& weight,
                   const Rational& atil, const Rational& btil, S0Sums& out, const Int& cap) {
  if (depth == R) return;
  Rational util = Rational(w.r) * btil / (atil + btil);
  Int vtil = util.floor();
  if (vtil <= 0) {
    out.degenerate = true;
    return;
  }
  for (Int mi = 0; mi < vtil; ++mi) {
    long m = to_long(mi);
    Rational btil2 = Rational(k - m) * btil - Rational(m) * atil;
    Rational weight2 = weight * w.phi[static_cast<size_t>(m)];
    out.B[static_cast<size_t>(depth)] += weight2 * btil2;
    out.A[static_cast<size_t>(depth)] += weight2 * btil;
    out.states += 1;
    if (out.states > cap) throw BudgetExceeded("s0 enumeration exceeds state cap");
    s0_dfs(k, R, w, depth + 1, weight2, btil, btil2, out, cap);
  }
}

inline S0Sums s0_sums(long k, long R, long s, const Int& cap) {
  long ell = to_long(ceil_cbrt(Int(k)));
  long r = k - ell;
  if (r < 1) throw HypothesisError("k - ceil(k^(1/3)) must be >= 1");
  if (s <= r) throw HypothesisError("s0 sums require s > r");
  PhiWeights w = phi_weights(r, s);
  S0Sums sums;
  sums.B.assign(static_cast<size_t>(R), Rational(0));
  sums.A.assign(static_cast<size_t>(R), Rational(0));
  s0_dfs(k, R, w, 0, Rational(1), Rational(1L, ell), Rational(1), sums, cap);
  return sums;
}

}  // namespace detail

// Builds the pruned-window sequence data for one m-tuple. When s is given,
// rho_m = btil_R (s/s0)^R is attached (requires the exact s0^R sum, so the
// same enumeration cap applies).
inline TildeSystem tilde_system(long k, long R, const std::vector<long>& m,
                                std::optional<long> s = std::nullopt,
                                const Int& state_cap = Int(1000000)) {
  if (static_cast<long>(m.size()) != R) throw HypothesisError("m tuple length != R");
  TildeSystem sys;
  sys.k = k;
  sys.R = R;
  sys.ell = to_long(ceil_cbrt(Int(k)));
  sys.r = k - sys.ell;
  sys.m = m;
  for (long mi : m)
    if (mi < 0 || mi > sys.r - 1) throw HypothesisError("m_n outside [0, r-1]");

  TildePair<Rational> t = tilde_ellk(k, m);
  sys.a_tilde = t.a;
  sys.b_tilde = t.b;
  for (long n = 1; n <= R; ++n) {
    const Rational& an = sys.a_tilde[static_cast<size_t>(n) - 1];
    const Rational& bn = sys.b_tilde[static_cast<size_t>(n) - 1];
    Rational util = Rational(sys.r) * bn / (an + bn);
    sys.u_tilde.push_back(util);
    sys.v_tilde.push_back(util.floor());
    if (Rational(m[static_cast<size_t>(n) - 1]) > util - Rational(1)) sys.in_window = false;
    if (Rational(m[static_cast<size_t>(n) - 1]) <= util - Rational(1)) {
      // within-window growth: btil_n >= ell * btil_{n-1}
      if (sys.b_tilde[static_cast<size_t>(n)] < Rational(sys.ell) * bn)
        throw ContractViolation("ell-growth failed at n = " + std::to_string(n));
    }
  }
  sys.k_m = sys.b_tilde.back();

  if (sys.in_window) {
    // 2^R <= k_m <= k^R
    Rational lo = Rational(Int(1) << static_cast<unsigned>(R));
    Rational hi = Rational(int_pow(Int(k), static_cast<unsigned long>(R)));
    if (sys.k_m < lo || sys.k_m > hi)
      throw ContractViolation("k_m outside [2^R, k^R]");
  }

  if (s) {
    detail::S0Sums sums = detail::s0_sums(k, R, *s, state_cap);
    Rational s0R = Rational(*s).pow(static_cast<unsigned long>(R)) * sums.B.back();
    if (s0R.sign() <= 0) throw HypothesisError("s0^R not positive; rho undefined");
    sys.rho_m = sys.k_m * Rational(*s).pow(static_cast<unsigned long>(R)) / s0R;
  }
  return sys;
}

struct S0Result {
  long k = 0, R = 0, s = 0, ell = 0, r = 0;
  bool degenerate = false;
  Rational s0_pow_R;   // exact rational value of s0^R (0 when degenerate)
  CertInterval s0;     // enclosure of s0 itself
  Int states;          // enumerated tuples
  std::vector<Check> checks;  // B_n >= Btil_n (per n) and the closed-form lower bound
};

// Exact evaluation of s0 through the pruned-window phi-weighted sum, plus
// certified verification of the lower bounds: B_n >= Btil_n for 1 <= n <= R
// and s0^R >= the closed-form expression in theta_plus/theta_minus built
// from alpha = k(k+1)/2 - k/3 - 3k^(2/3), beta = k(k-1)/2 + 3k^(5/3).
inline S0Result s0_section11(long k, long R, long s,
                             mpfr_prec_t prec = kDefaultPrecision,
                             const Int& state_cap = Int(1000000)) {
  S0Result res;
  res.k = k;
  res.R = R;
  res.s = s;
  res.ell = to_long(ceil_cbrt(Int(k)));
  res.r = k - res.ell;

  detail::S0Sums sums = detail::s0_sums(k, R, s, state_cap);
  res.states = sums.states;
  if (sums.B.back().is_zero()) {
    res.degenerate = true;
    res.s0_pow_R = Rational(0);
    res.s0 = CertInterval::of(Rational(0), prec);
    res.checks.push_back({"window", "empty index window: s0 = 0, flagged degenerate",
                          Verdict::Pass});
    return res;
  }
  res.s0_pow_R = Rational(s).pow(static_cast<unsigned long>(R)) * sums.B.back();
  res.s0 = refine(
      [&](mpfr_prec_t p) {
        return CertInterval::of(res.s0_pow_R, p).root(static_cast<unsigned long>(R));
      },
      [](const CertInterval& r) { return r.width() < Rational(Int(1), int_pow(Int(2), 64)); },
      prec);

  LargeKData lk = large_k_data(k);
  // Btil_n enclosures: s Btil_1 = alpha - beta/ell; s^2 Btil_2 = alpha*(s Btil_1) - r beta;
  // s^2 Btil_{n+2} = s alpha Btil_{n+1} - r beta Btil_n.
  auto btil_at = [&](mpfr_prec_t p) {
    CertInterval a = lk.alpha(p), b = lk.beta(p);
    CertInterval sI = CertInterval::of(Rational(s), p);
    CertInterval rI = CertInterval::of(Rational(res.r), p);
    CertInterval ellI = CertInterval::of(Rational(res.ell), p);
    std::vector<CertInterval> bt;  // Btil_1 .. (index 0 -> n=1)
    bt.push_back((a - b / ellI) / sI);
    if (R >= 2) bt.push_back((a * bt[0] - rI * b / sI) / sI);
    for (long n = 3; n <= R; ++n)
      bt.push_back((a * bt[static_cast<size_t>(n - 2)] -
                    rI * b * bt[static_cast<size_t>(n - 3)] / sI) /
                   sI);
    return bt;
  };

  for (long n = 1; n <= R; ++n) {
    const Rational& Bn = sums.B[static_cast<size_t>(n - 1)];
    Verdict v = Verdict::Indeterminate;
    std::string det;
    for (mpfr_prec_t p = prec; p <= kMaxPrecision; p *= 2) {
      CertInterval bt = btil_at(p)[static_cast<size_t>(n - 1)];
      det = "B_" + std::to_string(n) + " = " + Bn.to_string() + ", Btil_" + std::to_string(n) +
            " in " + bt.to_string(12);
      if (bt.certainly_le(Bn)) { v = Verdict::Pass; break; }
      if (bt.certainly_greater(Bn)) { v = Verdict::Fail; break; }
    }
    res.checks.push_back({"B_ge_Btil_n" + std::to_string(n), det, v});
  }

  // s0^R >= (tp^(R+1) - tm^(R+1))/(tp - tm) - (tp*tm/(ell r)) (tp^R - tm^R)/(tp - tm),
  // with tp*tm = r*beta, so the second term is (beta/ell)*(...).
  {
    Verdict v = Verdict::Indeterminate;
    std::string det;
    for (mpfr_prec_t p = prec; p <= kMaxPrecision; p *= 2) {
      CertInterval disc = lk.discriminant(p);
      if (disc.sign_hi() < 0) {
        v = Verdict::Pass;  // no real theta: the closed form makes no claim
        det = "disc < 0 certainly; closed-form bound vacuous";
        break;
      }
      if (disc.sign_lo() < 0) continue;
      CertInterval a = lk.alpha(p), b = lk.beta(p);
      CertInterval root = disc.sqrt_nonneg();
      CertInterval two = CertInterval::of(2L, p);
      CertInterval tp = (a + root) / two, tm = (a - root) / two;
      CertInterval upR = tp.pow_ui(static_cast<unsigned long>(R));
      CertInterval umR = tm.pow_ui(static_cast<unsigned long>(R));
      CertInterval num1 = tp * upR - tm * umR;  // tp^(R+1) - tm^(R+1)
      CertInterval num2 = upR - umR;
      CertInterval ellI = CertInterval::of(Rational(res.ell), p);
      CertInterval closed = (num1 - (b / ellI) * num2) / root;
      det = "s0^R = " + res.s0_pow_R.to_string() + ", closed form in " + closed.to_string(12);
      if (closed.certainly_le(res.s0_pow_R)) { v = Verdict::Pass; break; }
      if (closed.certainly_greater(res.s0_pow_R)) { v = Verdict::Fail; break; }
    }
    res.checks.push_back({"s0R_ge_closed_form", det, v});
  }
  return res;
}

// ---------------------------------------------------------------------------
// Lemma-style grid audits

struct AuditViolation {
  std::string what;
  std::vector<long> m;
  std::vector<Int> h;
};

struct AuditReport {
  long points_checked = 0;
  long points_skipped = 0;  // out-of-hypothesis grid points
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

using GridPoint = std::pair<std::vector<long>, std::vector<Int>>;

// For every in-hypothesis grid point (1 <= m_n <= util_n - 1, 0 <= h_n <=
// 15 k^R b): checks util_n <= u_n, the sandwich k_m b <= b_R <= k_m b +
// 16 k^(2R) b, and a_R <= b_R / ell, all in exact rational arithmetic.
inline AuditReport lemma_116_audit(long k, long R, const Int& b,
                                   const std::vector<GridPoint>& grid) {
  AuditReport rep;
  long ell = to_long(ceil_cbrt(Int(k)));
  long r = k - ell;
  Int hmax = 15 * int_pow(Int(k), static_cast<unsigned long>(R)) * b;

  for (const auto& [m, h] : grid) {
    if (static_cast<long>(m.size()) != R || static_cast<long>(h.size()) != R) {
      rep.points_skipped++;
      continue;
    }
    bool hyp = true;
    for (const Int& hn : h)
      if (hn < 0 || hn > hmax) hyp = false;
    TildePair<Rational> t = tilde_ellk(k, m);
    std::vector<Rational> util;
    for (long n = 1; n <= R && hyp; ++n) {
      const Rational& an = t.a[static_cast<size_t>(n - 1)];
      const Rational& bn = t.b[static_cast<size_t>(n - 1)];
      Rational u = Rational(r) * bn / (an + bn);
      util.push_back(u);
      long mn = m[static_cast<size_t>(n - 1)];
      if (mn < 1 || Rational(mn) > u - Rational(1)) hyp = false;
    }
    if (!hyp) {
      rep.points_skipped++;
      continue;
    }

    ABSequence seq = iterate_ab(k, r, b, m, h, AbFlavor::EllK);
    rep.points_checked++;
    auto flag = [&](const std::string& what) { rep.violations.push_back({what, m, h}); };

    // util_n <= u_n(m; h) and util_n >= 0
    for (long n = 1; n <= R; ++n) {
      Rational u = Rational(Int(r) * seq.b[static_cast<size_t>(n - 1)],
                            seq.a[static_cast<size_t>(n - 1)] + seq.b[static_cast<size_t>(n - 1)]);
      const Rational& ut = util[static_cast<size_t>(n - 1)];
      if (ut.sign() < 0 || ut > u) flag("util <= u failed at n = " + std::to_string(n));
    }
    Rational km = t.b.back();
    Rational bR(seq.b.back());
    Rational kmb = km * Rational(b);
    if (bR < kmb) flag("b_R >= k_m b failed");
    if (bR > kmb + Rational(16 * int_pow(Int(k), static_cast<unsigned long>(2 * R)) * b))
      flag("b_R <= k_m b + 16 k^(2R) b failed");
    if (Rational(seq.a.back()) > bR / Rational(ell)) flag("a_R <= b_R / ell failed");
  }
  return rep;
}

// All m-tuples of length R with entries in [min_m, util_n(m) - 1], walking
// the window tree; nullopt when more than `cap` tuples would be produced.
inline std::optional<std::vector<std::vector<long>>> window_m_tuples(long k, long R, long min_m,
                                                                     long cap) {
  long ell = to_long(ceil_cbrt(Int(k)));
  long r = k - ell;
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  bool overflow = false;
  auto rec = [&](auto&& self, const Rational& atil, const Rational& btil) -> void {
    if (overflow) return;
    if (static_cast<long>(cur.size()) == R) {
      out.push_back(cur);
      if (static_cast<long>(out.size()) > cap) overflow = true;
      return;
    }
    Rational util = Rational(r) * btil / (atil + btil);
    for (long m = min_m; Rational(m) <= util - Rational(1); ++m) {
      cur.push_back(m);
      self(self, btil, Rational(k - m) * btil - Rational(m) * atil);
      cur.pop_back();
      if (overflow) return;
    }
  };
  rec(rec, Rational(1L, ell), Rational(1));
  if (overflow) return std::nullopt;
  return out;
}

}  // namespace vmvt
