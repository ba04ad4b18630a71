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

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"
#include "vmvt/arith/rational.hpp"

// Exhaustive audit of the auxiliary congruence systems
//
//   sum_{i=1}^n (z_i - eta)^j == m_j  (mod p^{jb}),  1 <= j <= k,
//
// over 1 <= z_i <= p^{kb} with the side conditions: z == xi-tuple
// (mod p^{a+1}) for an a-level tuple with pairwise distinct entries
// (for a >= 1), or pairwise distinct residues mod p with z != eta (mod p)
// (for a = 0). Solutions are partitioned into classes mod p^h; the audited
// claim is that the maximal class count over (xi, eta, m) stays below k!
// whenever 0 <= a < b, (k-m)b >= (m+1)a and a <= h <= (k-m)b - ma.
//
// Equivalence levels are exposed as integer exponents of p throughout
// (classes mod p^h), which removes the fractional-index bookkeeping hazard.

namespace vmvt {

struct CongruenceInstance {
  long p = 0;  // prime, > k
  long k = 0;  // degree
  long a = 0, b = 0;  // congruence levels, 0 <= a < b
  long n = 0;  // tuple length
  long h = 0;  // equivalence level: classes mod p^h
  Int xi;      // base residue, 1 <= xi <= p^a (ignored for a = 0)
  Int eta;     // shift residue, 1 <= eta <= p^b
  bool z_ne_eta_mod_p = false;  // extra side condition, automatic when a = 0

  void validate() const {
    if (p <= k) throw HypothesisError("requires p > k");
    if (!(0 <= a && a < b)) throw HypothesisError("requires 0 <= a < b");
    if (n < 1 || k < 1) throw HypothesisError("requires n, k >= 1");
    if (h < 0) throw HypothesisError("requires h >= 0");
  }
};

inline CongruenceInstance make_instance(long p, long k, long a, long b, long n, long h,
                                        const Int& xi, const Int& eta) {
  CongruenceInstance inst;
  inst.p = p;
  inst.k = k;
  inst.a = a;
  inst.b = b;
  inst.n = n;
  inst.h = h;
  inst.xi = xi;
  inst.eta = eta;
  inst.z_ne_eta_mod_p = (a == 0);
  inst.validate();
  return inst;
}

// The set of integral m-tuples (xi_1, ..., xi_m) with 1 <= xi_i <= p^{c+1},
// xi_i == xi (mod p^c), pairwise distinct mod p^{c+1}. Ordered tuples.
inline std::vector<std::vector<Int>> xi_set(long c, long m, const Int& xi, long p) {
  if (c < 0 || m < 1 || p < 2) throw HypothesisError("xi_set requires c >= 0, m >= 1, p >= 2");
  Int pc = int_pow(Int(p), static_cast<unsigned long>(c));
  Int pc1 = pc * p;
  if (c == 0) {
    if (xi != 0) throw HypothesisError("xi_set with c = 0 requires xi = 0");
  } else if (!(1 <= xi && xi <= pc)) {
    throw HypothesisError("xi_set requires 1 <= xi <= p^c");
  }
  // candidates: the p lifts of xi mod p^c into [1, p^{c+1}]
  std::vector<Int> lifts;
  for (long t = 0; t < p; ++t) {
    Int v = ((xi + t * pc - 1) % pc1) + 1;
    lifts.push_back(v);
  }
  std::sort(lifts.begin(), lifts.end());
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  std::vector<bool> used(static_cast<size_t>(p), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (size_t i = 0; i < lifts.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(lifts[i]);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

namespace cong_detail {

using Key = unsigned __int128;

struct KeyHash {
  size_t operator()(Key k) const {
    std::uint64_t lo = static_cast<std::uint64_t>(k);
    std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ull);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

// Precomputed per-candidate data for the bulk enumeration.
struct Candidate {
  std::uint64_t value;       // z itself (fits: p^{kb} <= budget)
  std::uint64_t label;       // z mod p^{a+1}: pairwise-distinctness class
  std::uint64_t proj;        // z mod p^{h_store}
  std::vector<std::uint64_t> res;  // (z - eta)^j mod p^{jb}, j = 1..k
};

struct Bucket {
  std::uint64_t raw = 0;             // |B(m)|: raw solution count
  std::vector<std::uint64_t> reps;   // distinct projection tuples mod p^{h_store}
};

inline std::uint64_t pow_u64(std::uint64_t base, long e) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace cong_detail

// All solutions z of the instance's congruence system for the given target
// residues m_vec (m_j taken mod p^{jb}). Literal odometer + filter; intended
// for small instances and for cross-checking the bulk audit path.
inline std::vector<std::vector<Int>> enumerate_congruence_solutions(
    const CongruenceInstance& inst, const std::vector<Int>& m_vec,
    const Int& budget = Int(100000000)) {
  inst.validate();
  if (static_cast<long>(m_vec.size()) != inst.k)
    throw HypothesisError("m_vec must have k entries");
  Int pkb = int_pow(Int(inst.p), static_cast<unsigned long>(inst.k * inst.b));
  Int work = 1;
  for (long i = 0; i < inst.n; ++i) {
    work *= pkb;
    if (work > budget) throw BudgetExceeded("congruence enumeration exceeds budget");
  }

  std::vector<Int> mods(static_cast<size_t>(inst.k));
  for (long j = 1; j <= inst.k; ++j)
    mods[static_cast<size_t>(j - 1)] = int_pow(Int(inst.p), static_cast<unsigned long>(j * inst.b));
  Int pa = int_pow(Int(inst.p), static_cast<unsigned long>(inst.a));
  Int pa1 = pa * inst.p;

  std::vector<std::vector<Int>> out;
  std::vector<Int> z(static_cast<size_t>(inst.n), Int(1));
  for (;;) {
    bool ok = true;
    // side conditions
    for (long i = 0; i < inst.n && ok; ++i) {
      if (inst.a >= 1 && (z[static_cast<size_t>(i)] - inst.xi) % pa != 0) ok = false;
      if (inst.z_ne_eta_mod_p && (z[static_cast<size_t>(i)] - inst.eta) % inst.p == 0) ok = false;
      for (long l = 0; l < i && ok; ++l)
        if ((z[static_cast<size_t>(i)] - z[static_cast<size_t>(l)]) % pa1 == 0) ok = false;
    }
    if (ok) {
      for (long j = 1; j <= inst.k && ok; ++j) {
        Int sum = 0;
        for (long i = 0; i < inst.n; ++i) {
          Int d = z[static_cast<size_t>(i)] - inst.eta;
          Int pw;
          mpz_powm_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(j),
                      mods[static_cast<size_t>(j - 1)].get_mpz_t());
          sum += pw;
        }
        if ((sum - m_vec[static_cast<size_t>(j - 1)]) % mods[static_cast<size_t>(j - 1)] != 0)
          ok = false;
      }
      if (ok) out.push_back(z);
    }
    long i = inst.n - 1;
    while (i >= 0 && z[static_cast<size_t>(i)] == pkb) {
      z[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    z[static_cast<size_t>(i)] += 1;
  }
  return out;
}

// Number of classes mod p^h of the solution set for one residue target.
inline Int class_count(const CongruenceInstance& inst, const std::vector<Int>& m_vec,
                       const Int& budget = Int(100000000)) {
  auto sols = enumerate_congruence_solutions(inst, m_vec, budget);
  if (sols.empty()) return 0;
  long h = std::min(inst.h, inst.k * inst.b);
  Int ph = int_pow(Int(inst.p), static_cast<unsigned long>(h));
  std::vector<std::vector<Int>> classes;
  for (auto& z : sols) {
    std::vector<Int> proj;
    proj.reserve(z.size());
    for (auto& zi : z) proj.push_back(zi % ph);
    classes.push_back(std::move(proj));
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return Int(static_cast<long>(classes.size()));
}

// Full audit report for one (p, k, m, a, b) cell.
struct ClassReport {
  long p = 0, k = 0, m = 0, a = 0, b = 0;
  long n = 0;      // m + 1
  long h_max = 0;  // (k - m) b - m a, the maximal in-hypothesis level
  bool hypothesis_met = false;
  Int bound;      // k!
  Int max_count;  // B at level h_max, maximised over (xi, eta, m-vec)
  std::vector<Int> max_count_by_level;  // levels 0..h_max
  bool within_bound = false;
  bool monotone = false;  // per-bucket class counts nondecreasing in level
  Int total_solutions;    // sum over m-vec of |B(m)|
  Int expected_mass;      // closed-form count of side-condition-admissible z
  bool mass_ok = false;
  std::map<long, long> histogram;  // class count at h_max -> number of m-classes
  long xi_scanned = 0;
  std::uint64_t tuples_enumerated = 0;
};

namespace cong_detail {

// Bulk enumeration for one (xi, eta): buckets every admissible z-tuple by
// its residue key, deduplicating projections mod p^{h_store}.
inline void bucket_scan(const CongruenceInstance& inst, long h_store,
                        std::unordered_map<Key, Bucket, KeyHash>& buckets,
                        std::uint64_t& tuples) {
  long p = inst.p, k = inst.k, b = inst.b, a = inst.a, n = inst.n;
  std::uint64_t pkb = pow_u64(static_cast<std::uint64_t>(p), k * b);
  std::uint64_t pa = pow_u64(static_cast<std::uint64_t>(p), a);
  std::uint64_t pa1 = pa * static_cast<std::uint64_t>(p);
  std::uint64_t ph = pow_u64(static_cast<std::uint64_t>(p), h_store);
  std::uint64_t eta = mpz_get_ui(inst.eta.get_mpz_t());
  std::uint64_t xi = mpz_get_ui(inst.xi.get_mpz_t());

  std::vector<std::uint64_t> mods(static_cast<size_t>(k));
  for (long j = 1; j <= k; ++j)
    mods[static_cast<size_t>(j - 1)] = pow_u64(static_cast<std::uint64_t>(p), j * b);

  std::vector<Candidate> cand;
  for (std::uint64_t z = 1; z <= pkb; ++z) {
    if (a >= 1 && (z % pa) != (xi % pa)) continue;
    if (inst.z_ne_eta_mod_p && z % static_cast<std::uint64_t>(p) ==
                                   eta % static_cast<std::uint64_t>(p))
      continue;
    Candidate c;
    c.value = z;
    c.label = z % pa1;
    c.proj = z % ph;
    c.res.resize(static_cast<size_t>(k));
    // (z - eta)^j mod p^{jb}, with z - eta taken mod p^{kb}
    std::uint64_t d = (z + pkb - (eta % pkb)) % pkb;
    for (long j = 1; j <= k; ++j) {
      // compute d^j mod p^{jb} via 128-bit intermediate
      unsigned __int128 pw = 1;
      for (long e = 0; e < j; ++e) pw = (pw * d) % mods[static_cast<size_t>(j - 1)];
      c.res[static_cast<size_t>(j - 1)] = static_cast<std::uint64_t>(pw);
    }
    cand.push_back(std::move(c));
  }

  // ordered n-tuples of candidates with pairwise distinct labels
  std::vector<const Candidate*> pick(static_cast<size_t>(n));
  std::vector<std::uint64_t> acc(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, long depth) -> void {
    if (depth == n) {
      Key key = 0;
      for (long j = k - 1; j >= 0; --j)
        key = key * mods[static_cast<size_t>(j)] + acc[static_cast<size_t>(j)];
      std::uint64_t proj = 0;
      for (long i = 0; i < n; ++i) proj = proj * ph + pick[static_cast<size_t>(i)]->proj;
      Bucket& bk = buckets[key];
      bk.raw += 1;
      bool seen = false;
      for (std::uint64_t r : bk.reps)
        if (r == proj) {
          seen = true;
          break;
        }
      if (!seen) bk.reps.push_back(proj);
      ++tuples;
      return;
    }
    for (const Candidate& c : cand) {
      bool clash = false;
      for (long i = 0; i < depth; ++i)
        if (pick[static_cast<size_t>(i)]->label == c.label) {
          clash = true;
          break;
        }
      if (clash) continue;
      pick[static_cast<size_t>(depth)] = &c;
      for (long j = 0; j < k; ++j) {
        acc[static_cast<size_t>(j)] += c.res[static_cast<size_t>(j)];
        if (acc[static_cast<size_t>(j)] >= mods[static_cast<size_t>(j)])
          acc[static_cast<size_t>(j)] -= mods[static_cast<size_t>(j)];
      }
      self(self, depth + 1);
      for (long j = 0; j < k; ++j) {
        acc[static_cast<size_t>(j)] += mods[static_cast<size_t>(j)] - c.res[static_cast<size_t>(j)];
        if (acc[static_cast<size_t>(j)] >= mods[static_cast<size_t>(j)])
          acc[static_cast<size_t>(j)] -= mods[static_cast<size_t>(j)];
      }
    }
  };
  rec(rec, 0);
}

}  // namespace cong_detail

// Exhaustive audit of one cell: n = m + 1 congruence variables, equivalence
// levels 0..h_max with h_max = (k-m)b - ma, full maximisation over residue
// targets. The (xi, eta) maximisation is performed after two exact
// reductions (verified in the unit suite against the literal maximisation):
// translating z by a constant pins eta = p^b, and unit scaling of z - eta
// identifies all xi !≡ eta (mod p) when a >= 1, so a single xi suffices.
inline ClassReport lemma31_audit(long p, long k, long m, long a, long b,
                                 const Int& budget = Int(100000000),
                                 bool full_xi_eta_scan = false) {
  ClassReport rep;
  rep.p = p;
  rep.k = k;
  rep.m = m;
  rep.a = a;
  rep.b = b;
  rep.n = m + 1;
  rep.h_max = (k - m) * b - m * a;
  rep.hypothesis_met =
      p > k && 0 <= m && m <= k - 1 && 0 <= a && a < b && (k - m) * b >= (m + 1) * a;
  Int bound;
  mpz_fac_ui(bound.get_mpz_t(), static_cast<unsigned long>(k));
  rep.bound = bound;
  if (rep.h_max < 0) throw HypothesisError("negative h_max; hypothesis violated structurally");

  // budget pre-flight on the raw tuple space p^{kbn}
  Int space = int_pow(Int(p), static_cast<unsigned long>(k * b * rep.n));
  if (space > budget)
    throw BudgetExceeded("congruence audit space " + to_string(space) + " exceeds budget");

  long h_store = std::min(rep.h_max, k * b);
  Int pb = int_pow(Int(p), static_cast<unsigned long>(b));
  Int pa = int_pow(Int(p), static_cast<unsigned long>(a));

  std::vector<std::pair<Int, Int>> xi_eta;  // (xi, eta) pairs to scan
  if (full_xi_eta_scan) {
    Int pa_range = a == 0 ? Int(1) : pa;
    for (Int xi = a == 0 ? Int(0) : Int(1); xi <= (a == 0 ? Int(0) : pa_range); ++xi)
      for (Int eta = 1; eta <= pb; ++eta) {
        if (a >= 1 && (xi - eta) % p == 0) continue;
        xi_eta.emplace_back(xi, eta);
      }
  } else {
    // translation-reduced: eta = p^b == 0 (mod p); scaling-reduced: xi = 1
    xi_eta.emplace_back(a == 0 ? Int(0) : Int(1), pb);
  }
  rep.xi_scanned = static_cast<long>(xi_eta.size());

  rep.max_count = 0;
  rep.max_count_by_level.assign(static_cast<size_t>(rep.h_max) + 1, Int(0));
  rep.monotone = true;
  rep.within_bound = true;
  rep.total_solutions = 0;
  bool first_pair = true;

  for (const auto& [xi, eta] : xi_eta) {
    CongruenceInstance inst = make_instance(p, k, a, b, rep.n, rep.h_max, xi, eta);
    std::unordered_map<cong_detail::Key, cong_detail::Bucket, cong_detail::KeyHash> buckets;
    cong_detail::bucket_scan(inst, h_store, buckets, rep.tuples_enumerated);

    Int mass = 0;
    std::uint64_t ph = cong_detail::pow_u64(static_cast<std::uint64_t>(p), h_store);
    for (const auto& [key, bk] : buckets) {
      mass += Int(static_cast<unsigned long>(bk.raw));
      // class counts per level, from the stored mod-p^{h_store} projections
      Int prev = 0;
      for (long e = 0; e <= rep.h_max; ++e) {
        long eff = std::min(e, h_store);
        std::uint64_t pe = cong_detail::pow_u64(static_cast<std::uint64_t>(p), eff);
        std::vector<std::uint64_t> low;
        low.reserve(bk.reps.size());
        for (std::uint64_t r : bk.reps) {
          // re-project each coordinate from base p^{h_store} to p^{eff}
          std::uint64_t out = 0, rr = r;
          std::vector<std::uint64_t> coords(static_cast<size_t>(rep.n));
          for (long i = rep.n - 1; i >= 0; --i) {
            coords[static_cast<size_t>(i)] = rr % ph;
            rr /= ph;
          }
          for (long i = 0; i < rep.n; ++i) out = out * pe + coords[static_cast<size_t>(i)] % pe;
          low.push_back(out);
        }
        std::sort(low.begin(), low.end());
        low.erase(std::unique(low.begin(), low.end()), low.end());
        Int cnt(static_cast<long>(low.size()));
        if (cnt < prev) rep.monotone = false;
        prev = cnt;
        if (cnt > rep.max_count_by_level[static_cast<size_t>(e)])
          rep.max_count_by_level[static_cast<size_t>(e)] = cnt;
      }
      Int top(static_cast<long>(bk.reps.size()));
      if (top > rep.max_count) rep.max_count = top;
      long key_hist = to_long(top);
      rep.histogram[key_hist] += 1;
    }

    if (first_pair) {
      rep.total_solutions = mass;
      // closed-form mass of side-condition-admissible tuples
      Int expected = 1;
      for (long i = 0; i < rep.n; ++i) {
        Int residue_choices = a == 0 ? Int(p - 1 - i) : Int(p - i);
        Int lifts = int_pow(Int(p), static_cast<unsigned long>(k * b - a - 1));
        expected *= residue_choices * lifts;
      }
      rep.expected_mass = expected;
      rep.mass_ok = (rep.total_solutions == rep.expected_mass);
      first_pair = false;
    }
  }
  rep.within_bound = rep.max_count <= rep.bound;
  return rep;
}

// ---------------------------------------------------------------------------
// The binomial-shift polynomial identity

// Exact rational coefficients (c, d) with d_{j, j-k+m+1} = 1 satisfying
//
//   c_{j,k-m-1} + sum_{l=k-m}^{j} c_{j,l} (x+1)^l = sum_{u=j-k+m+1}^{j} d_{j,u} x^u,
//
// found by solving for the top block of d so that the (x+1)-expansion has no
// powers 1..k-m-1, then verified by full polynomial expansion.
struct BinomialIdentity {
  long k = 0, m = 0, j = 0;
  long beta = 0;               // j - k + m + 1: lowest power on the right
  Rational c_const;            // c_{j, k-m-1}
  std::vector<Rational> c;     // c_{j,l}, l = k-m .. j
  std::vector<Rational> d;     // d_{j,u}, u = beta .. j; d[0] == 1
  Int denominator_lcm;         // lcm of all coefficient denominators
  std::vector<Int> denominator_primes;
  bool verified = false;
};

namespace cong_detail {

inline Int binom(long n, long r) {
  if (r < 0 || r > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

// Solves the square linear system by exact Gauss-Jordan elimination.
// Returns false when singular.
inline bool solve_linear(std::vector<std::vector<Rational>>& mat, std::vector<Rational>& rhs,
                         std::vector<Rational>& out) {
  size_t nn = mat.size();
  for (size_t col = 0; col < nn; ++col) {
    size_t piv = col;
    while (piv < nn && mat[piv][col].is_zero()) ++piv;
    if (piv == nn) return false;
    std::swap(mat[piv], mat[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = mat[col][col].inverse();
    for (size_t cc = 0; cc < nn; ++cc) mat[col][cc] *= inv;
    rhs[col] *= inv;
    for (size_t rr = 0; rr < nn; ++rr) {
      if (rr == col || mat[rr][col].is_zero()) continue;
      Rational f = mat[rr][col];
      for (size_t cc = 0; cc < nn; ++cc) mat[rr][cc] -= f * mat[col][cc];
      rhs[rr] -= f * rhs[col];
    }
  }
  out = rhs;
  return true;
}

}  // namespace cong_detail

inline BinomialIdentity binomial_identity(long k, long m, long j) {
  if (!(0 <= m && m <= k - 1)) throw HypothesisError("binomial_identity requires 0 <= m <= k-1");
  if (!(k - m <= j && j <= k)) throw HypothesisError("binomial_identity requires k-m <= j <= k");
  BinomialIdentity id;
  id.k = k;
  id.m = m;
  id.j = j;
  id.beta = j - k + m + 1;
  long alpha = k - m - 1;  // number of vanishing (x+1)-powers, 1..alpha

  // P(x) = x^beta * (1 + g_1 x + ... + g_alpha x^alpha). Conditions: the
  // coefficient of y^t in P(y-1) vanishes for t = 1..alpha.
  // coeff_t(P(y-1)) = sum_u d_u * C(u, t) * (-1)^(u-t), d_{beta+i} = g_i.
  std::vector<Rational> g(static_cast<size_t>(alpha), Rational(0));
  if (alpha > 0) {
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(alpha),
                                           std::vector<Rational>(static_cast<size_t>(alpha)));
    std::vector<Rational> rhs(static_cast<size_t>(alpha));
    for (long t = 1; t <= alpha; ++t) {
      for (long i = 1; i <= alpha; ++i) {
        long u = id.beta + i;
        Int coef = cong_detail::binom(u, t);
        if ((u - t) % 2 != 0) coef = -coef;
        mat[static_cast<size_t>(t - 1)][static_cast<size_t>(i - 1)] = Rational(coef);
      }
      Int c0 = cong_detail::binom(id.beta, t);
      if ((id.beta - t) % 2 != 0) c0 = -c0;
      rhs[static_cast<size_t>(t - 1)] = -Rational(c0);
    }
    if (!cong_detail::solve_linear(mat, rhs, g))
      throw ContractViolation("binomial identity system singular");
  }

  id.d.assign(static_cast<size_t>(k - m), Rational(0));
  id.d[0] = Rational(1);
  for (long i = 1; i <= alpha; ++i) id.d[static_cast<size_t>(i)] = g[static_cast<size_t>(i - 1)];

  // c_{j,l} = coefficient of y^l of P(y-1) for l in {0} union [k-m, j]
  auto y_coeff = [&](long t) {
    Rational acc(0);
    for (long u = id.beta; u <= j; ++u) {
      Int coef = cong_detail::binom(u, t);
      if ((u - t) % 2 != 0) coef = -coef;
      acc += id.d[static_cast<size_t>(u - id.beta)] * Rational(coef);
    }
    return acc;
  };
  id.c_const = y_coeff(0);
  for (long l = k - m; l <= j; ++l) id.c.push_back(y_coeff(l));

  // verification: expand c_const + sum c_l (x+1)^l - sum d_u x^u to zero
  std::vector<Rational> poly(static_cast<size_t>(j) + 1, Rational(0));
  poly[0] += id.c_const;
  for (long l = k - m; l <= j; ++l) {
    const Rational& cl = id.c[static_cast<size_t>(l - (k - m))];
    for (long t = 0; t <= l; ++t)
      poly[static_cast<size_t>(t)] += cl * Rational(cong_detail::binom(l, t));
  }
  for (long u = id.beta; u <= j; ++u)
    poly[static_cast<size_t>(u)] -= id.d[static_cast<size_t>(u - id.beta)];
  id.verified = true;
  for (const auto& coef : poly)
    if (!coef.is_zero()) id.verified = false;
  if (!id.verified) throw ContractViolation("binomial identity failed to expand to zero");

  // record the coefficient denominators (the mod-p normalisation needs p
  // coprime to all of them)
  Int lcm = 1;
  auto fold = [&](const Rational& r) {
    Int den = r.denominator();
    Int g2;
    mpz_gcd(g2.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g2 * den;
  };
  fold(id.c_const);
  for (const auto& r : id.c) fold(r);
  for (const auto& r : id.d) fold(r);
  id.denominator_lcm = lcm;
  Int rem = lcm;
  for (Int q = 2; q * q <= rem; ++q)
    if (rem % q == 0) {
      id.denominator_primes.push_back(q);
      while (rem % q == 0) rem /= q;
    }
  if (rem > 1) id.denominator_primes.push_back(rem);
  return id;
}

}  // namespace vmvt
