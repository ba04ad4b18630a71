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

#include <sstream>

#include "vmvt/meanvalue.hpp"

using namespace vmvt;

TEST_CASE("census basics") {
  ProfileCensus c = census(1, 2, 3);
  REQUIRE(c.table.size() == 3);
  for (const auto& key : c.sorted_keys()) CHECK(c.table.at(key) == 1);
  auto keys = c.sorted_keys();
  CHECK(c.decode(keys[0]) == std::vector<Int>{Int(1), Int(1)});
  CHECK(c.decode(keys[1]) == std::vector<Int>{Int(2), Int(4)});
  CHECK(c.decode(keys[2]) == std::vector<Int>{Int(3), Int(9)});

  // X = 1: one profile (s, s, ..., s), count 1
  ProfileCensus one = census(4, 3, 1);
  REQUIRE(one.table.size() == 1);
  CHECK(one.decode(one.sorted_keys()[0]) == std::vector<Int>{Int(4), Int(4), Int(4)});
  CHECK(one.mass() == 1);

  // mass identity
  CHECK(census(2, 2, 4).mass() == 16);
  CHECK(census(3, 2, 5).mass() == 125);

  // component ranges: s <= sums[j] <= s X^(j+1)
  ProfileCensus p = census(3, 2, 5);
  for (const auto& key : p.sorted_keys()) {
    auto comps = p.decode(key);
    for (long j = 0; j < 2; ++j) {
      CHECK(comps[static_cast<size_t>(j)] >= 3);
      CHECK(comps[static_cast<size_t>(j)] <= 3 * int_pow(Int(5), static_cast<unsigned long>(j + 1)));
    }
  }
}

TEST_CASE("J examples and oracle") {
  for (long k = 1; k <= 5; ++k) CHECK(count_solutions(1, k, 13) == 13);
  CHECK(count_solutions(3, 3, 1) == 1);
  CHECK(count_solutions(2, 2, 10) == 190);
  CHECK(count_solutions_oracle(2, 2, 10) == 190);
  CHECK(count_solutions_oracle(1, 3, 7) == 7);

  // the k = 2 system forces multiset equality: J(2,2,X) = 2X^2 - X
  for (long X = 1; X <= 50; ++X)
    CHECK(count_solutions(2, 2, X) == 2 * Int(X) * Int(X) - Int(X));

  // oracle equivalence on a spot grid (the acceptance suite runs the full one)
  CHECK(count_solutions(2, 2, 6) == count_solutions_oracle(2, 2, 6));
  CHECK(count_solutions(3, 2, 4) == count_solutions_oracle(3, 2, 4));
  CHECK(count_solutions(2, 3, 5) == count_solutions_oracle(2, 3, 5));
  CHECK(count_solutions(3, 3, 4) == count_solutions_oracle(3, 3, 4));

  CHECK_THROWS_AS(count_solutions_oracle(4, 2, 100), BudgetExceeded);
}

TEST_CASE("strategies and threads give bit-identical results") {
  CensusOptions mim;
  mim.strategy = CensusStrategy::MeetInMiddle;
  for (auto [s, k, X] : {std::tuple<long, long, long>{3, 2, 8},
                         {4, 2, 6},
                         {3, 3, 6},
                         {2, 2, 12}}) {
    Int base = count_solutions(s, k, X);
    CHECK(count_solutions(s, k, X, mim) == base);
    for (int threads : {2, 8}) {
      CensusOptions opt;
      opt.threads = threads;
      CHECK(count_solutions(s, k, X, opt) == base);
      ProfileCensus a = census(s, k, X), b = census(s, k, X, opt);
      CHECK(a.table == b.table);
    }
  }
}

TEST_CASE("diagonal bounds") {
  DiagonalReport d = diagonal_bounds(2, 2, 10);
  CHECK(d.j_value == 190);
  CHECK(d.lower == 100);
  CHECK(d.upper == 10000);
  CHECK(d.ok);

  DiagonalReport eq = diagonal_bounds(1, 3, 9);
  CHECK(eq.j_value == eq.lower);  // J = X exactly

  DiagonalReport unit = diagonal_bounds(4, 2, 1);
  CHECK(unit.j_value == 1);
  CHECK(unit.ok);

  // J >= X^s across a grid
  for (long s = 1; s <= 3; ++s)
    for (long k = 1; k <= 3; ++k)
      for (long X = 1; X <= 6; ++X) CHECK(diagonal_bounds(s, k, X).ok);
}

TEST_CASE("monotonicity in X and s") {
  for (long s = 1; s <= 3; ++s)
    for (long X = 2; X <= 8; ++X)
      CHECK(count_solutions(s, 2, X) >= count_solutions(s, 2, X - 1));
  for (long s = 2; s <= 4; ++s)
    CHECK(count_solutions(s, 2, 6) >= count_solutions(s - 1, 2, 6));
  for (long s = 2; s <= 3; ++s)
    CHECK(count_solutions(s, 3, 5) >= count_solutions(s - 1, 3, 5));
}

TEST_CASE("slope diagnostics") {
  SlopeReport s1 = slope_estimate(1, 2, {10, 20, 40, 80});
  CHECK(s1.slope == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(s1.consistent);

  SlopeReport s2 = slope_estimate(2, 2, {10, 20, 40, 80});
  CHECK(s2.slope > 2.0);
  CHECK(s2.consistent);  // 2 + log-correction, within the 0.35 tolerance

  SlopeReport s3 = slope_estimate(3, 3, {8, 16, 24, 32});
  CHECK(s3.consistent);
  CHECK(s3.slope < 3.35);

  CHECK_THROWS_AS(slope_estimate(1, 2, {10, 20}), HypothesisError);
  CHECK_THROWS_AS(slope_estimate(1, 2, {10, 10, 20}), HypothesisError);
}

TEST_CASE("csv export") {
  ProfileCensus c = census(2, 2, 4);
  std::ostringstream os;
  export_csv(c, os);
  std::string out = os.str();
  CHECK(out.rfind("j1,j2,count\n", 0) == 0);
  CHECK(out.find("2,2,1\n") != std::string::npos);   // (1,1): the minimal pair
  CHECK(out.find("8,32,1\n") != std::string::npos);  // (4,4): the maximal pair
  // rows are sorted by profile
  CHECK(out.find("2,2,1") < out.find("8,32,1"));
}

TEST_CASE("binary cache round trip") {
  ProfileCensus c = census(3, 2, 6);
  std::ostringstream os(std::ios::binary);
  save_census(c, os);
  std::istringstream is(os.str(), std::ios::binary);
  ProfileCensus back = load_census(is);
  CHECK(back.s == c.s);
  CHECK(back.k == c.k);
  CHECK(back.X == c.X);
  CHECK(back.table == c.table);
  CHECK(count_solutions(back) == count_solutions(c));

  std::istringstream bad("not a census file at all", std::ios::binary);
  CHECK_THROWS_AS(load_census(bad), Error);
}

TEST_CASE("budget refusal") {
  CensusOptions tiny;
  tiny.memory_budget = 512;
  CHECK_THROWS_AS(census(6, 6, 50, tiny), BudgetExceeded);
  try {
    census(6, 6, 50, tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("exceeds budget") != std::string::npos);
  }
}
