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

#include "vmvt/congruences.hpp"

using namespace vmvt;

namespace {

// Residue key of one z-tuple: (sum (z_i - eta)^j mod p^{jb})_{j=1..k}.
std::vector<Int> m_vec_of(const CongruenceInstance& inst, const std::vector<Int>& z) {
  std::vector<Int> out;
  for (long j = 1; j <= inst.k; ++j) {
    Int mod = int_pow(Int(inst.p), static_cast<unsigned long>(j * inst.b));
    Int sum = 0;
    for (const Int& zi : z) {
      Int d = zi - inst.eta, pw;
      mpz_powm_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(j), mod.get_mpz_t());
      sum += pw;
    }
    out.push_back(sum % mod);
  }
  return out;
}

}  // namespace

TEST_CASE("xi_set") {
  auto singletons = xi_set(0, 1, Int(0), 5);
  REQUIRE(singletons.size() == 5);
  for (long v = 1; v <= 5; ++v) CHECK(singletons[static_cast<size_t>(v - 1)][0] == v);

  CHECK(xi_set(0, 2, Int(0), 5).size() == 20);  // 5 * 4 ordered pairs

  auto lifted = xi_set(1, 2, Int(3), 5);
  CHECK(lifted.size() == 20);
  for (const auto& t : lifted) {
    for (const auto& v : t) {
      CHECK(v >= 1);
      CHECK(v <= 25);
      CHECK((v - 3) % 5 == 0);
    }
    CHECK(t[0] != t[1]);
  }

  // more requested entries than residue classes: empty, not an error
  CHECK(xi_set(0, 6, Int(0), 5).empty());
  CHECK_THROWS_AS(xi_set(0, 1, Int(2), 5), HypothesisError);   // c = 0 needs xi = 0
  CHECK_THROWS_AS(xi_set(1, 1, Int(9), 5), HypothesisError);   // xi > p^c
}

TEST_CASE("solution enumeration matches the defining congruences") {
  CongruenceInstance inst = make_instance(5, 3, 0, 1, 1, 2, Int(0), Int(17));
  // pick z = 44 and enumerate its residue class
  std::vector<Int> target = m_vec_of(inst, {Int(44)});
  auto sols = enumerate_congruence_solutions(inst, target);
  bool found = false;
  for (const auto& z : sols) {
    CHECK(m_vec_of(inst, z) == target);       // direct substitution
    CHECK((z[0] - inst.eta) % 5 != 0);        // a = 0 side condition
    if (z[0] == 44) found = true;
  }
  CHECK(found);

  // a >= 1: membership in the lifted tuple set
  CongruenceInstance deep = make_instance(5, 3, 1, 2, 2, 3, Int(2), Int(25));
  std::vector<Int> t2 = m_vec_of(deep, {Int(7), Int(12)});
  auto sols2 = enumerate_congruence_solutions(deep, t2);
  CHECK(!sols2.empty());
  for (const auto& z : sols2) {
    for (const auto& zi : z) CHECK((zi - 2) % 5 == 0);
    CHECK((z[0] - z[1]) % 25 != 0);
  }

  // an unreachable residue target: empty list
  std::vector<Int> none = {Int(0), Int(0), Int(0)};
  CHECK(enumerate_congruence_solutions(inst, none).empty());

  CHECK_THROWS_AS(enumerate_congruence_solutions(
                      make_instance(5, 3, 0, 2, 3, 2, Int(0), Int(1)),
                      {Int(0), Int(0), Int(0)}, Int(1000)),
                  BudgetExceeded);
}

TEST_CASE("class count at the extreme levels") {
  CongruenceInstance inst = make_instance(5, 3, 0, 1, 2, 0, Int(0), Int(125));
  std::vector<Int> target = m_vec_of(inst, {Int(1), Int(2)});

  // h = 0: everything is equivalent
  CHECK(class_count(inst, target) == 1);

  // h >= kb: classes are exactly the distinct solutions
  inst.h = 3;
  Int classes = class_count(inst, target);
  CHECK(classes == Int(static_cast<long>(enumerate_congruence_solutions(inst, target).size())));

  // monotone between the extremes
  inst.h = 1;
  Int c1 = class_count(inst, target);
  inst.h = 2;
  Int c2 = class_count(inst, target);
  CHECK(c1 <= c2);
  CHECK(c2 <= classes);
}

TEST_CASE("audit matches the literal per-target enumeration") {
  // bucket-scan class counts cross-checked against class_count on every
  // residue class of a small instance
  ClassReport rep = lemma31_audit(5, 3, 1, 0, 1);
  CongruenceInstance inst = make_instance(5, 3, 0, 1, 2, rep.h_max, Int(0), Int(125));
  Int max_direct = 0;
  std::vector<Int> z(2);
  std::set<std::vector<Int>> seen;
  for (long z1 = 1; z1 <= 125; ++z1)
    for (long z2 = 1; z2 <= 125; ++z2) {
      if (z1 % 5 == 0 || z2 % 5 == 0) continue;  // eta = 125 == 0 mod 5
      if ((z1 - z2) % 5 == 0) continue;
      z[0] = z1;
      z[1] = z2;
      auto mv = m_vec_of(inst, z);
      if (!seen.insert(mv).second) continue;
      Int c = class_count(inst, mv);
      if (c > max_direct) max_direct = c;
    }
  CHECK(max_direct == rep.max_count);
}

TEST_CASE("lemma 3.1 audit on the named cells") {
  ClassReport r1 = lemma31_audit(5, 3, 1, 0, 1);
  CHECK(r1.hypothesis_met);
  CHECK(r1.bound == 6);
  CHECK(r1.within_bound);
  CHECK(r1.monotone);
  CHECK(r1.mass_ok);
  CHECK(r1.h_max == 2);

  ClassReport r2 = lemma31_audit(5, 4, 0, 0, 1);
  CHECK(r2.n == 1);
  CHECK(r2.bound == 24);
  CHECK(r2.within_bound);
  CHECK(r2.mass_ok);

  // same shape as the heavy (7, 3, 1, 1, 2) cell, exhaustively at p = 5
  ClassReport r3 = lemma31_audit(5, 3, 1, 1, 2, Int(500000000));
  CHECK(r3.hypothesis_met);  // (k-m)b = 4 >= (m+1)a = 2
  CHECK(r3.within_bound);
  CHECK(r3.monotone);
  CHECK(r3.mass_ok);

  // the default budget refuses the p = 7 version up front
  CHECK_THROWS_AS(lemma31_audit(7, 3, 1, 1, 2), BudgetExceeded);

  // out-of-hypothesis cell is computed but not claimed
  ClassReport oh = lemma31_audit(5, 3, 2, 1, 2, Int(100000000));
  CHECK(!oh.hypothesis_met);  // (k-m)b = 2 < (m+1)a = 3
}

TEST_CASE("lemma 3.1 audit, heavy cell at p = 7") {
  // (7, 3, 1, 1, 2): 242M admissible tuples; needs an explicit budget
  ClassReport rep = lemma31_audit(7, 3, 1, 1, 2, Int(300000000));
  CHECK(rep.hypothesis_met);
  CHECK(rep.within_bound);
  CHECK(rep.monotone);
  CHECK(rep.mass_ok);
}

TEST_CASE("reductions agree with the literal maximisation") {
  for (auto [p, k, m, a, b] : {std::tuple<long, long, long, long, long>{5, 3, 1, 0, 1},
                               {5, 3, 0, 0, 1},
                               {5, 4, 0, 0, 1},
                               {5, 3, 0, 1, 2},
                               {7, 3, 0, 0, 1}}) {
    ClassReport reduced = lemma31_audit(p, k, m, a, b, Int(500000000), false);
    ClassReport full = lemma31_audit(p, k, m, a, b, Int(500000000), true);
    INFO("p=" << p << " k=" << k << " m=" << m << " a=" << a << " b=" << b);
    CHECK(reduced.max_count == full.max_count);
    CHECK(reduced.max_count_by_level == full.max_count_by_level);
  }
}

TEST_CASE("translation invariance of class counts") {
  std::mt19937_64 rng(35791);
  CongruenceInstance base = make_instance(5, 3, 1, 2, 1, 3, Int(2), Int(7));
  Int pkb = int_pow(Int(5), 6);
  std::uniform_int_distribution<long> zd(1, 15625), td(1, 15625);
  for (int i = 0; i < 8; ++i) {
    Int z0(zd(rng)), t(td(rng));
    // align z0 with the side condition z == xi (mod p)
    z0 = z0 - (z0 - base.xi) % 5;
    if (z0 < 1) z0 += 5;
    std::vector<Int> mv = m_vec_of(base, {z0});
    Int c_base = class_count(base, mv);

    CongruenceInstance shifted = base;
    shifted.xi = ((base.xi + t - 1) % int_pow(Int(5), 1)) + 1;
    shifted.eta = ((base.eta + t - 1) % int_pow(Int(5), 2)) + 1;
    // the shifted residue key of the shifted representative is identical
    Int z1 = ((z0 + t - 1) % pkb) + 1;
    std::vector<Int> mv_shift = m_vec_of(shifted, {z1});
    CHECK(mv_shift == mv);
    CHECK(class_count(shifted, mv) == c_base);
  }
}

TEST_CASE("binomial shift identity") {
  BinomialIdentity id = binomial_identity(3, 1, 2);
  CHECK(id.verified);
  CHECK(id.beta == 1);
  CHECK(id.c_const == Rational(-1, 2));
  REQUIRE(id.c.size() == 1);
  CHECK(id.c[0] == Rational(1, 2));
  REQUIRE(id.d.size() == 2);
  CHECK(id.d[0] == Rational(1));
  CHECK(id.d[1] == Rational(1, 2));
  CHECK(id.denominator_lcm == 2);
  REQUIRE(id.denominator_primes.size() == 1);
  CHECK(id.denominator_primes[0] == 2);

  // degenerate single-block case: j = k, m = k-1, P(x) = x^k
  BinomialIdentity deg = binomial_identity(4, 3, 4);
  CHECK(deg.verified);
  REQUIRE(deg.d.size() == 1);
  CHECK(deg.d[0] == Rational(1));
  CHECK(deg.c_const == Rational(1));  // (-1)^4
  REQUIRE(deg.c.size() == 4);
  CHECK(deg.c[0] == Rational(-4));
  CHECK(deg.c[1] == Rational(6));
  CHECK(deg.c[2] == Rational(-4));
  CHECK(deg.c[3] == Rational(1));

  CHECK_THROWS_AS(binomial_identity(3, 1, 1), HypothesisError);  // j < k - m
  CHECK_THROWS_AS(binomial_identity(3, 3, 3), HypothesisError);  // m > k - 1
}

TEST_CASE("binomial identity verifies across the k <= 8 grid") {
  for (long k = 1; k <= 8; ++k)
    for (long m = 0; m <= k - 1; ++m)
      for (long j = k - m; j <= k; ++j) {
        BinomialIdentity id = binomial_identity(k, m, j);
        INFO("k=" << k << " m=" << m << " j=" << j);
        REQUIRE(id.verified);
        CHECK(id.d[0] == Rational(1));
      }
}
