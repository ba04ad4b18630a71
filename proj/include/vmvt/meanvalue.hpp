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
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"

// Exact computation of J_{s,k}(X), the number of integral solutions of
//
//   x_1^j + ... + x_s^j = y_1^j + ... + y_s^j  (1 <= j <= k),  1 <= x_i, y_i <= X.
//
// The engine is a census of power-sum profiles: for each s-tuple over [1, X]
// record the vector (sum x, sum x^2, ..., sum x^k) and count multiplicities
// N(v). By pairing the two sides of the system, J = sum_v N(v)^2 exactly —
// no exponential sums and no floating point anywhere on this path.

namespace vmvt {

enum class CensusStrategy { Convolve, MeetInMiddle };

struct CensusOptions {
  CensusStrategy strategy = CensusStrategy::Convolve;
  int threads = 1;
  std::uint64_t memory_budget = 8ull << 30;  // bytes
};

// Keyed multiset of power-sum profiles. Keys are the k components encoded
// big-endian at a fixed per-census width, so byte-lexicographic key order is
// exactly numeric profile order.
struct ProfileCensus {
  long s = 0, k = 0, X = 0;
  size_t component_width = 0;
  std::unordered_map<std::string, Int> table;

  Int mass() const {
    Int m = 0;
    for (const auto& [key, cnt] : table) m += cnt;
    return m;
  }

  std::vector<Int> decode(const std::string& key) const {
    std::vector<Int> comps(static_cast<size_t>(k));
    for (long j = 0; j < k; ++j) {
      Int v = 0;
      for (size_t i = 0; i < component_width; ++i) {
        v <<= 8;
        v += static_cast<unsigned char>(key[static_cast<size_t>(j) * component_width + i]);
      }
      comps[static_cast<size_t>(j)] = v;
    }
    return comps;
  }

  std::vector<std::string> sorted_keys() const {
    std::vector<std::string> keys;
    keys.reserve(table.size());
    for (const auto& [key, cnt] : table) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    return keys;
  }
};

namespace census_detail {

inline size_t bytes_for(const Int& max_value) {
  size_t bits = mpz_sizeinbase(max_value.get_mpz_t(), 2);
  return (bits + 7) / 8;
}

inline void encode_component(std::string& out, const Int& v, size_t width) {
  size_t pos = out.size();
  out.resize(pos + width, '\0');
  size_t count = 0;
  // export magnitude big-endian into the tail of the field
  size_t need = v == 0 ? 0 : bytes_for(v);
  if (need > width) throw ContractViolation("census component exceeds key width");
  mpz_export(out.data() + pos + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
}

// Upper bound on the number of distinct profiles of t-tuples: profiles are
// multiset invariants, so C(X+t-1, t) bounds them, as does the box
// prod_j (t*(X^j - 1) + 1).
inline Int profile_bound(long t, long k, long X) {
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(X + t - 1),
               static_cast<unsigned long>(t));
  Int box = 1;
  for (long j = 1; j <= k; ++j) {
    box *= Int(t) * (int_pow(Int(X), static_cast<unsigned long>(j)) - 1) + 1;
    if (box > binom) return binom;
  }
  return std::min(binom, box);
}

// Single-variable profiles x -> (x, x^2, ..., x^k), precomputed.
inline std::vector<std::vector<Int>> unit_profiles(long k, long X) {
  std::vector<std::vector<Int>> u(static_cast<size_t>(X) + 1);
  for (long x = 1; x <= X; ++x) {
    std::vector<Int> p(static_cast<size_t>(k));
    Int pw = 1;
    for (long j = 0; j < k; ++j) {
      pw *= x;
      p[static_cast<size_t>(j)] = pw;
    }
    u[static_cast<size_t>(x)] = std::move(p);
  }
  return u;
}

struct Layer {
  // profile components -> count;  encoded with the final key width
  std::unordered_map<std::string, Int> table;
};

inline std::string encode(const std::vector<Int>& comps, size_t width) {
  std::string key;
  key.reserve(comps.size() * width);
  for (const Int& c : comps) encode_component(key, c, width);
  return key;
}

// One convolution step: out(v + profile(x)) += in(v) for all v, x. The x
// range is split into contiguous chunks, one per thread; per-chunk tables
// are merged in chunk order. Counts are exact integers, so the result is
// independent of the split.
inline Layer convolve_step(const Layer& in, long k, long X,
                           const std::vector<std::vector<Int>>& unit, size_t width,
                           int threads) {
  int t = std::max(1, threads);
  long chunk = (X + t - 1) / t;
  std::vector<Layer> partial(static_cast<size_t>(t));
  auto work = [&](int ti) {
    long lo = 1 + ti * chunk;
    long hi = std::min(X, lo + chunk - 1);
    auto& out = partial[static_cast<size_t>(ti)].table;
    std::vector<Int> comps(static_cast<size_t>(k));
    for (const auto& [key, cnt] : in.table) {
      std::vector<Int> base(static_cast<size_t>(k));
      {
        Int v;
        for (long j = 0; j < k; ++j) {
          v = 0;
          for (size_t i = 0; i < width; ++i) {
            v <<= 8;
            v += static_cast<unsigned char>(key[static_cast<size_t>(j) * width + i]);
          }
          base[static_cast<size_t>(j)] = v;
        }
      }
      for (long x = lo; x <= hi; ++x) {
        const auto& ux = unit[static_cast<size_t>(x)];
        for (long j = 0; j < k; ++j)
          comps[static_cast<size_t>(j)] = base[static_cast<size_t>(j)] + ux[static_cast<size_t>(j)];
        out[encode(comps, width)] += cnt;
      }
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int ti = 0; ti < t; ++ti) pool.emplace_back(work, ti);
    for (auto& th : pool) th.join();
  }
  Layer out = std::move(partial[0]);
  for (int ti = 1; ti < t; ++ti)
    for (auto& [key, cnt] : partial[static_cast<size_t>(ti)].table) out.table[key] += cnt;
  return out;
}

inline Layer convolve_to(long t_target, long k, long X,
                         const std::vector<std::vector<Int>>& unit, size_t width,
                         int threads) {
  Layer layer;
  layer.table[encode(std::vector<Int>(static_cast<size_t>(k), Int(0)), width)] = 1;
  for (long t = 0; t < t_target; ++t) layer = convolve_step(layer, k, X, unit, width, threads);
  return layer;
}

}  // namespace census_detail

// Exact census of s-tuple power-sum profiles over [1, X]. Refuses up front
// (with the estimate) when the budget pre-flight predicts the table cannot
// fit; never returns a partial result.
inline ProfileCensus census(long s, long k, long X, CensusOptions opt = {}) {
  if (s < 1 || k < 1 || X < 1) throw HypothesisError("census requires s, k, X >= 1");
  using namespace census_detail;

  Int bound = profile_bound(s, k, X);
  Int max_component = Int(s) * int_pow(Int(X), static_cast<unsigned long>(k));
  size_t width = bytes_for(max_component);
  // rough per-entry cost: key bytes + hash-map node and count overhead
  Int est_bytes = bound * Int(static_cast<long>(width * static_cast<size_t>(k) + 96));
  if (est_bytes > Int(static_cast<unsigned long>(opt.memory_budget)))
    throw BudgetExceeded("census estimate " + to_string(est_bytes) + " bytes exceeds budget " +
                         std::to_string(opt.memory_budget));

  auto unit = unit_profiles(k, X);
  ProfileCensus out;
  out.s = s;
  out.k = k;
  out.X = X;
  out.component_width = width;

  if (opt.strategy == CensusStrategy::Convolve || s == 1) {
    out.table = convolve_to(s, k, X, unit, width, opt.threads).table;
    return out;
  }

  long a = (s + 1) / 2, b = s - a;
  Layer la = convolve_to(a, k, X, unit, width, opt.threads);
  Layer lb = b == a ? la : convolve_to(b, k, X, unit, width, opt.threads);
  std::unordered_map<std::string, Int> combined;
  std::vector<Int> comps(static_cast<size_t>(k));
  ProfileCensus tmp;
  tmp.k = k;
  tmp.component_width = width;
  for (const auto& [ka_, ca] : la.table) {
    std::vector<Int> ua = tmp.decode(ka_);
    for (const auto& [kb_, cb] : lb.table) {
      std::vector<Int> ub = tmp.decode(kb_);
      for (long j = 0; j < k; ++j)
        comps[static_cast<size_t>(j)] = ua[static_cast<size_t>(j)] + ub[static_cast<size_t>(j)];
      combined[encode(comps, width)] += ca * cb;
    }
  }
  out.table = std::move(combined);
  return out;
}

// J_{s,k}(X) = sum_v N(v)^2, exactly.
inline Int count_solutions(const ProfileCensus& c) {
  Int j = 0;
  for (const auto& [key, cnt] : c.table) j += cnt * cnt;
  return j;
}

inline Int count_solutions(long s, long k, long X, CensusOptions opt = {}) {
  return count_solutions(census(s, k, X, opt));
}

// Independent validator: literal enumeration of all (x, y) pairs, testing
// the defining equations directly. Deliberately shares nothing with the
// census path. Only for tiny instances (X^(2s) <= 10^8 by default).
inline Int count_solutions_oracle(long s, long k, long X, const Int& budget = Int(100000000)) {
  if (s < 1 || k < 1 || X < 1) throw HypothesisError("oracle requires s, k, X >= 1");
  Int work = int_pow(Int(X), static_cast<unsigned long>(2 * s));
  if (work > budget) throw BudgetExceeded("oracle budget exceeded: X^(2s) = " + to_string(work));

  std::vector<long> tuple(static_cast<size_t>(2 * s), 1);
  Int total = 0;
  std::vector<Int> lhs(static_cast<size_t>(k)), rhs(static_cast<size_t>(k));
  for (;;) {
    for (long j = 0; j < k; ++j) lhs[static_cast<size_t>(j)] = rhs[static_cast<size_t>(j)] = 0;
    for (long i = 0; i < 2 * s; ++i) {
      Int pw = 1;
      for (long j = 0; j < k; ++j) {
        pw *= tuple[static_cast<size_t>(i)];
        (i < s ? lhs : rhs)[static_cast<size_t>(j)] += pw;
      }
    }
    if (lhs == rhs) total += 1;
    long i = 2 * s - 1;
    while (i >= 0 && tuple[static_cast<size_t>(i)] == X) {
      tuple[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    tuple[static_cast<size_t>(i)]++;
  }
  return total;
}

struct DiagonalReport {
  long s = 0, k = 0, X = 0;
  Int j_value;
  Int lower;  // X^s
  Int upper;  // X^(2s)
  bool ok = false;
  double ratio = 0.0;  // J / X^s, diagnostic
};

// Finite-X content of the diagonal lower bound: X^s <= J <= X^(2s).
inline DiagonalReport diagonal_bounds(long s, long k, long X, CensusOptions opt = {}) {
  DiagonalReport r;
  r.s = s;
  r.k = k;
  r.X = X;
  r.j_value = count_solutions(s, k, X, opt);
  r.lower = int_pow(Int(X), static_cast<unsigned long>(s));
  r.upper = int_pow(Int(X), static_cast<unsigned long>(2 * s));
  r.ok = r.lower <= r.j_value && r.j_value <= r.upper;
  double num = mpz_get_d(r.j_value.get_mpz_t());
  double den = mpz_get_d(r.lower.get_mpz_t());
  r.ratio = num / den;
  return r;
}

struct SlopeReport {
  long s = 0, k = 0;
  std::vector<long> X;
  std::vector<Int> J;
  double slope = 0.0;
  std::vector<double> residuals;
  bool consistent = false;  // slope <= s + tolerance; diagnostic only
  double tolerance = 0.35;
};

inline double log_of(const Int& n) {
  long exp2;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

// Least-squares slope of log J against log X. A diagnostic for the strongly
// diagonal regime, never a proof: flagged CONSISTENT when
// slope <= s + tolerance, INCONCLUSIVE otherwise.
inline SlopeReport slope_estimate(long s, long k, const std::vector<long>& X_list,
                                  double tolerance = 0.35, CensusOptions opt = {}) {
  if (X_list.size() < 3) throw HypothesisError("slope_estimate needs at least 3 points");
  for (size_t i = 1; i < X_list.size(); ++i)
    if (X_list[i] <= X_list[i - 1])
      throw HypothesisError("slope_estimate needs strictly increasing X");
  SlopeReport r;
  r.s = s;
  r.k = k;
  r.X = X_list;
  r.tolerance = tolerance;
  std::vector<double> lx, lj;
  for (long x : X_list) {
    Int j = count_solutions(s, k, x, opt);
    r.J.push_back(j);
    lx.push_back(std::log(static_cast<double>(x)));
    lj.push_back(log_of(j));
  }
  double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += lj[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * lj[i];
  }
  r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - r.slope * sx) / n;
  for (size_t i = 0; i < lx.size(); ++i)
    r.residuals.push_back(lj[i] - (intercept + r.slope * lx[i]));
  r.consistent = r.slope <= static_cast<double>(s) + tolerance;
  return r;
}

// ---------------------------------------------------------------------------
// Census persistence: CSV export and a little-endian binary cache.

inline void export_csv(const ProfileCensus& c, std::ostream& os) {
  for (long j = 1; j <= c.k; ++j) os << "j" << j << (j < c.k ? "," : ",count\n");
  for (const auto& key : c.sorted_keys()) {
    std::vector<Int> comps = c.decode(key);
    for (const auto& v : comps) os << v.get_str() << ",";
    os << c.table.at(key).get_str() << "\n";
  }
}

namespace census_detail {

constexpr char kCacheMagic[9] = "VMVTCEN1";

inline void put_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

inline std::uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

inline void put_mpz(std::ostream& os, const Int& v) {
  if (v < 0) throw HypothesisError("cache stores nonnegative integers only");
  size_t need = v == 0 ? 0 : bytes_for(v);
  put_u64(os, need);
  if (need) {
    std::string buf(need, '\0');
    size_t count = 0;
    mpz_export(buf.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    os.write(buf.data(), static_cast<std::streamsize>(need));
  }
}

inline Int get_mpz(std::istream& is) {
  std::uint64_t need = get_u64(is);
  Int v = 0;
  if (need) {
    std::string buf(need, '\0');
    is.read(buf.data(), static_cast<std::streamsize>(need));
    mpz_import(v.get_mpz_t(), need, 1, 1, 1, 0, buf.data());
  }
  return v;
}

}  // namespace census_detail

inline void save_census(const ProfileCensus& c, std::ostream& os) {
  using namespace census_detail;
  os.write(kCacheMagic, 8);
  put_u64(os, 1);  // format version
  put_u64(os, static_cast<std::uint64_t>(c.s));
  put_u64(os, static_cast<std::uint64_t>(c.k));
  put_u64(os, static_cast<std::uint64_t>(c.X));
  put_u64(os, static_cast<std::uint64_t>(c.component_width));
  put_u64(os, static_cast<std::uint64_t>(c.table.size()));
  for (const auto& key : c.sorted_keys()) {
    os.write(key.data(), static_cast<std::streamsize>(key.size()));
    put_mpz(os, c.table.at(key));
  }
}

inline ProfileCensus load_census(std::istream& is) {
  using namespace census_detail;
  char magic[8];
  is.read(magic, 8);
  if (!is || std::string(magic, 8) != std::string(kCacheMagic, 8))
    throw Error("census cache: bad magic");
  if (get_u64(is) != 1) throw Error("census cache: unsupported version");
  ProfileCensus c;
  c.s = static_cast<long>(get_u64(is));
  c.k = static_cast<long>(get_u64(is));
  c.X = static_cast<long>(get_u64(is));
  c.component_width = static_cast<size_t>(get_u64(is));
  std::uint64_t n = get_u64(is);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string key(c.component_width * static_cast<size_t>(c.k), '\0');
    is.read(key.data(), static_cast<std::streamsize>(key.size()));
    c.table[key] = get_mpz(is);
  }
  if (!is) throw Error("census cache: truncated");
  return c;
}

}  // namespace vmvt
