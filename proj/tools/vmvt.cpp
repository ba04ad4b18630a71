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

// Batch command-line surface. Exit codes:
//   0  all checks pass
//   2  hypothesis not met
//   3  discrepancy or violation found
//   4  resource refusal (enumeration or memory budget)
//   64 usage error

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vmvt/applications.hpp"
#include "vmvt/congruences.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/meanvalue.hpp"
#include "vmvt/recurrences.hpp"
#include "vmvt/report.hpp"

namespace {

using namespace vmvt;

struct GlobalOpts {
  std::string format = "json";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  long precision = kDefaultPrecision;
  std::uint64_t memory_budget = 8ull << 30;
  bool deterministic = false;
};

void emit(const Json& report, const GlobalOpts& g) {
  if (g.format == "csv") {
    // flat key,value view of the results object
    std::cout << "key,value\n";
    const Json& res = report.contains("results") ? report["results"] : report;
    for (auto it = res.begin(); it != res.end(); ++it) {
      if (it.value().is_primitive())
        std::cout << it.key() << "," << it.value().dump() << "\n";
      else
        std::cout << it.key() << "," << "\"" << it.value().dump() << "\"" << "\n";
    }
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int run_table(long kmin, long kmax, bool restricted, bool include_t11, const GlobalOpts& g) {
  BestBoundOptions opt;
  opt.policy.restricted_to_r0 = restricted;
  if (!restricted) {
    opt.policy.lo = 2;
    opt.policy.hi = 0;  // filled per k below
  }
  opt.include_t11 = include_t11;
  opt.large_k.precision = g.precision;

  Json rows = Json::array();
  bool any_discrepancy = false;
  for (long k = kmin; k <= kmax; ++k) {
    BestBoundOptions ok = opt;
    if (!restricted) ok.policy.hi = k - 1;
    TableRow row = table_row(k, ok);
    Json r;
    r["k"] = k;
    r["d_computed"] = row.best.s_total;
    if (row.d_reference) {
      r["d_reference"] = *row.d_reference;
      r["verdict"] = row.match ? "MATCH" : "DISCREPANCY";
      if (!row.match) any_discrepancy = true;
    } else {
      r["verdict"] = "UNCOMPARED";
    }
    r["best"] = json_certificate(row.best);
    if (!row.blocking.empty()) {
      Json b = Json::array();
      for (const auto& ch : row.blocking) b.push_back(json_check(ch));
      r["blocking_inequalities"] = b;
    }
    if (row.unrestricted) r["reference_reproduced_by"] = json_certificate(*row.unrestricted);
    rows.push_back(std::move(r));
  }

  Json report = make_report(
      "table",
      Json{{"kmin", kmin}, {"kmax", kmax}, {"r_policy", restricted ? "restricted_to_r0" : "all"}},
      g.deterministic);
  report["results"] = Json{{"rows", rows}};

  if (g.format == "csv") {
    std::cout << "k,d_computed,d_reference,verdict,theorem,r,s_core\n";
    for (const auto& r : rows) {
      std::cout << r["k"] << "," << r["d_computed"] << ","
                << (r.contains("d_reference") ? r["d_reference"].dump() : "") << ","
                << r["verdict"].get<std::string>() << ","
                << r["best"]["theorem"].get<std::string>() << ","
                << (r["best"].contains("r") ? r["best"]["r"].dump() : "") << ","
                << r["best"]["s_core"] << "\n";
    }
  } else {
    emit(report, g);
  }
  return any_discrepancy ? 3 : 0;
}

int run_certify(long k, long s, const GlobalOpts& g) {
  BestBoundOptions opt;
  opt.large_k.precision = g.precision;
  Certificate best = best_bound(k, opt);
  Json res;
  res["requested_s"] = s;
  res["best_bound"] = json_certificate(best);
  res["covered"] = s <= best.s_total;
  // closed ranges for context
  Json ranges = Json::array();
  for (const auto& c : closed_ranges(k, opt.large_k)) ranges.push_back(json_certificate(c));
  res["closed_ranges"] = ranges;
  Json report = make_report("certify", Json{{"k", k}, {"s", s}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return s <= best.s_total ? 0 : 3;
}

int run_count(long k, long s, long x, const std::string& strategy, const std::string& export_csv,
              const std::string& save_cache, const std::string& load_cache,
              const GlobalOpts& g) {
  CensusOptions opt;
  opt.threads = g.threads;
  opt.memory_budget = g.memory_budget;
  opt.strategy = strategy == "meet_in_middle" ? CensusStrategy::MeetInMiddle
                                              : CensusStrategy::Convolve;
  ProfileCensus c;
  if (!load_cache.empty()) {
    std::ifstream in(load_cache, std::ios::binary);
    if (!in) throw Error("cannot open cache " + load_cache);
    c = load_census(in);
    if (c.s != s || c.k != k || c.X != x) throw HypothesisError("cache parameters mismatch");
  } else {
    c = census(s, k, x, opt);
  }
  if (!export_csv.empty()) {
    std::ofstream os(export_csv);
    vmvt::export_csv(c, os);
  }
  if (!save_cache.empty()) {
    std::ofstream os(save_cache, std::ios::binary);
    save_census(c, os);
  }
  Int j = count_solutions(c);
  Int lower = int_pow(Int(x), static_cast<unsigned long>(s));
  Int upper = int_pow(Int(x), static_cast<unsigned long>(2 * s));
  bool ok = lower <= j && j <= upper;

  Json res;
  res["J"] = json_exact(j);
  res["census_mass"] = json_exact(c.mass());
  res["distinct_profiles"] = static_cast<long>(c.table.size());
  res["diagonal_lower"] = json_exact(lower);
  res["trivial_upper"] = json_exact(upper);
  res["bounds_ok"] = ok;
  res["ratio_to_diagonal"] =
      json_diagnostic(mpz_get_d(j.get_mpz_t()) / mpz_get_d(lower.get_mpz_t()));
  Json report = make_report(
      "count", Json{{"k", k}, {"s", s}, {"x", x}, {"strategy", strategy}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return ok ? 0 : 3;
}

int run_congruence(long p, long k, long m, long a, long b, bool full_scan, const GlobalOpts& g) {
  ClassReport rep = lemma31_audit(p, k, m, a, b, Int(100000000), full_scan);
  Json res;
  res["n"] = rep.n;
  res["h_max"] = rep.h_max;
  res["hypothesis_met"] = rep.hypothesis_met;
  res["bound"] = json_exact(rep.bound);
  res["max_class_count"] = json_exact(rep.max_count);
  res["within_bound"] = rep.within_bound;
  res["monotone_in_level"] = rep.monotone;
  Json lv = Json::array();
  for (const auto& v : rep.max_count_by_level) lv.push_back(v.get_str());
  res["max_count_by_level"] = lv;
  res["total_solutions"] = json_exact(rep.total_solutions);
  res["expected_mass"] = json_exact(rep.expected_mass);
  res["mass_ok"] = rep.mass_ok;
  Json hist = Json::object();
  for (const auto& [cnt, nb] : rep.histogram) hist[std::to_string(cnt)] = nb;
  res["class_count_histogram"] = hist;
  res["xi_eta_pairs_scanned"] = rep.xi_scanned;
  res["tuples_enumerated"] = rep.tuples_enumerated;
  Json report = make_report(
      "congruence", Json{{"p", p}, {"k", k}, {"m", m}, {"a", a}, {"b", b}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  if (!rep.hypothesis_met) return 2;
  return (rep.within_bound && rep.monotone && rep.mass_ok) ? 0 : 3;
}

int run_recurrence(long k, long r, long s, long R, const GlobalOpts& g) {
  BnAnTable tab = bn_table(k, r, s, R);
  auto minR = min_valid_R(k, r, s, std::max(R, 64L));
  ThetaData t = tab.theta;
  Json res;
  res["delta"] = json_exact(t.delta);
  res["alpha"] = json_exact(t.alpha);
  res["beta"] = json_exact(t.beta);
  res["discriminant"] = json_exact(t.discriminant);
  res["s_below_theta_plus"] = below_theta_plus(s, t);
  Json bs = Json::array(), as = Json::array();
  for (long n = 1; n <= R; ++n) {
    bs.push_back(json_exact(tab.B[static_cast<size_t>(n)]));
    as.push_back(json_exact(tab.A[static_cast<size_t>(n)]));
  }
  res["B"] = bs;
  res["A"] = as;
  res["s0_pow_R"] = json_exact(tab.s0_pow_R);
  res["closed_form_matches_recurrence"] = true;  // bn_table throws otherwise
  if (minR)
    res["min_valid_R"] = *minR;
  else
    res["min_valid_R"] = "NotFound";
  Json report = make_report(
      "recurrence", Json{{"k", k}, {"r", r}, {"s", s}, {"R", R}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return 0;
}

int run_waring(long k, const GlobalOpts& g) {
  LargeKOptions lk;
  lk.precision = g.precision;
  XiConstants xc = xi_and_C(g.precision);
  WaringBound wb = waring_u1(k, lk);
  Int defect = critical_defect(k, lk);
  Json res;
  res["xi"] = json_interval(xc.xi);
  res["C"] = json_interval(xc.C);
  res["u1"] = json_exact(wb.u1);
  res["w_star"] = wb.w_star;
  res["delta_v_upper_bound"] = json_exact(wb.delta_v);
  res["gtilde_bound"] = json_exact(wb.gtilde_bound);
  res["critical_defect"] = json_exact(defect);
  Json report = make_report("waring", Json{{"k", k}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return 0;
}

int run_tarry(long k, const GlobalOpts& g) {
  TarryBound t = tarry_bound(k, g.precision);
  Json res;
  res["bound"] = json_exact(t.bound);
  res["condition"] = verdict_name(t.condition);
  res["margin"] = json_interval(t.margin);
  Json report = make_report("tarry", Json{{"k", k}}, g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return t.condition == Verdict::Pass ? 0 : 2;
}

int run_audit_all(const GlobalOpts& g) {
  Json res;
  bool all_ok = true;

  {  // constants
    XiConstants xc = xi_and_C(std::max<long>(g.precision, 64));
    bool ok = xc.xi.contains(Rational(424574L, 1000000L)) ||
              (xc.xi.certainly_greater(Rational(424574L, 1000000L)) &&
               xc.xi.certainly_less(Rational(424575L, 1000000L)));
    res["constants"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }
  {  // counting oracle grid (small)
    bool ok = true;
    for (long X = 2; X <= 8; ++X)
      ok &= count_solutions(2, 2, X) == count_solutions_oracle(2, 2, X);
    ok &= count_solutions(3, 3, 4) == count_solutions_oracle(3, 3, 4);
    res["counting_oracle"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }
  {  // recurrence exactness (bn_table throws on route disagreement)
    bool ok = true;
    try {
      for (long k : {4L, 9L})
        for (long r = 2; r <= depth_cap(k); ++r) bn_table(k, r, 2 * r + 3, 10);
    } catch (const ContractViolation&) {
      ok = false;
    }
    res["recurrence_exactness"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }
  {  // congruence classes at p = 5
    bool ok = true;
    for (long kk : {3L, 4L})
      for (long m = 0; m <= kk - 1; ++m) {
        Int space = int_pow(Int(5), static_cast<unsigned long>(kk * (m + 1)));
        if (space > Int(10000000)) continue;
        ClassReport rep = lemma31_audit(5, kk, m, 0, 1);
        ok &= rep.within_bound && rep.monotone && rep.mass_ok;
      }
    res["congruence_classes"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }
  {  // sequence inequality suites, small
    bool ok = true;
    try {
      for (long k = 4; k <= 6; ++k) {
        auto tuples = window_m_tuples(k, 3, 1, 10000);
        std::vector<GridPoint> grid;
        for (const auto& mt : *tuples) grid.push_back({mt, std::vector<Int>(3, Int(0))});
        ok &= lemma_116_audit(k, 3, Int(5), grid).ok();
        for (long m1 = 0; m1 <= 1; ++m1)
          iterate_ab(k, 2, Int(9), {m1, 1, 0}, {Int(1), Int(0), Int(2)}, AbFlavor::SqrtK);
      }
    } catch (const ContractViolation&) {
      ok = false;
    }
    res["sequence_inequalities"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }
  {  // identities
    bool ok = true;
    for (long r = 1; r <= 12; ++r)
      for (long s = r + 1; s <= 40; ++s) {
        PhiWeights w = phi_weights(r, s);
        Rational sum = w.phi_star;
        for (const auto& p : w.phi) sum += p;
        ok &= sum == Rational(1);
      }
    for (long kk = 3; kk <= 6; ++kk)
      for (long m = 0; m <= kk - 1; ++m)
        for (long j = kk - m; j <= kk; ++j) ok &= binomial_identity(kk, m, j).verified;
    ok &= census(3, 2, 5).mass() == int_pow(Int(5), 3);
    res["identities"] = ok ? "pass" : "fail";
    all_ok &= ok;
  }

  Json report = make_report("audit-all", Json::object(), g.deterministic);
  report["results"] = std::move(res);
  emit(report, g);
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact admissible-exponent laboratory for Vinogradov systems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "worker threads (runtime-only, never result-affecting)");
  app.add_option("--precision", g.precision, "working precision in bits");
  app.add_option("--memory-budget", g.memory_budget, "census memory budget in bytes");
  app.add_flag("--deterministic", g.deterministic, "omit timestamps for byte-stable output");

  long kmin = 4, kmax = 20, k = 0, s = 0, x = 0, p = 0, m = 0, a = 0, b = 0, r = 0, R = 1;
  bool unrestricted = false, include_t11 = false, full_scan = false;
  std::string strategy = "convolve", export_path, save_cache, load_cache;

  auto* t = app.add_subcommand("table", "best-bound table with reference comparison");
  t->add_option("--kmin", kmin);
  t->add_option("--kmax", kmax);
  t->add_flag("--all-r", unrestricted, "search depths beyond r0(k) (out of hypothesis)");
  t->add_flag("--include-t11", include_t11, "fold in the large-k criterion");

  auto* ce = app.add_subcommand("certify", "best certificate covering s at degree k");
  ce->add_option("--k", k)->required();
  ce->add_option("--s", s)->required();

  auto* co = app.add_subcommand("count", "exact J_{s,k}(X) via the profile census");
  co->add_option("--k", k)->required();
  co->add_option("--s", s)->required();
  co->add_option("--x", x)->required();
  co->add_option("--strategy", strategy)->check(CLI::IsMember({"convolve", "meet_in_middle"}));
  co->add_option("--export-csv", export_path);
  co->add_option("--save-cache", save_cache);
  co->add_option("--load-cache", load_cache);

  auto* cg = app.add_subcommand("congruence", "congruence class-count audit");
  cg->add_option("--p", p)->required();
  cg->add_option("--k", k)->required();
  cg->add_option("--m", m)->required();
  cg->add_option("--a", a)->required();
  cg->add_option("--b", b)->required();
  cg->add_flag("--full-scan", full_scan, "literal maximisation over all (xi, eta)");

  auto* rc = app.add_subcommand("recurrence", "B_n/A_n table and validity horizon");
  rc->add_option("--k", k)->required();
  rc->add_option("--r", r)->required();
  rc->add_option("--s", s)->required();
  rc->add_option("--R", R)->required();

  auto* wa = app.add_subcommand("waring", "asymptotic-formula bound and constants");
  wa->add_option("--k", k)->required();

  auto* ta = app.add_subcommand("tarry", "power-sum chain bound");
  ta->add_option("--k", k)->required();

  app.add_subcommand("audit-all", "run the fast self-audit battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (t->parsed()) return run_table(kmin, kmax, !unrestricted, include_t11, g);
    if (ce->parsed()) return run_certify(k, s, g);
    if (co->parsed())
      return run_count(k, s, x, strategy, export_path, save_cache, load_cache, g);
    if (cg->parsed()) return run_congruence(p, k, m, a, b, full_scan, g);
    if (rc->parsed()) return run_recurrence(k, r, s, R, g);
    if (wa->parsed()) return run_waring(k, g);
    if (ta->parsed()) return run_tarry(k, g);
    return run_audit_all(g);
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 4;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
