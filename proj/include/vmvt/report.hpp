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

#include <ctime>
#include <string>

#include <json.hpp>

#include "vmvt/arith/arith.hpp"
#include "vmvt/exponents.hpp"

// Machine-readable reports. Every number carries its arithmetic class:
//   exact      — rationals / integers / quadratic-extension values, emitted
//                as decimal strings so no exactness is lost downstream;
//   interval   — certified enclosures, both endpoints emitted;
//   diagnostic — floating-point values with no certification claim.

namespace vmvt {

using Json = nlohmann::ordered_json;

constexpr const char* kToolName = "vmvt";
constexpr const char* kToolVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

inline Json json_exact(const Int& v) {
  return Json{{"class", "exact"}, {"value", v.get_str()}};
}

inline Json json_exact(const Rational& v) {
  return Json{{"class", "exact"}, {"value", v.to_string()}};
}

inline Json json_exact(const QuadExt& v, mpfr_prec_t prec = 96) {
  Json j{{"class", "exact"}, {"value", v.to_string()}};
  CertInterval enc = to_interval(v, prec);
  j["approx_lo"] = enc.lo_string(24);
  j["approx_hi"] = enc.hi_string(24);
  return j;
}

inline Json json_interval(const CertInterval& v, size_t digits = 40) {
  return Json{{"class", "interval"}, {"lo", v.lo_string(digits)}, {"hi", v.hi_string(digits)}};
}

inline Json json_diagnostic(double v) {
  return Json{{"class", "diagnostic"}, {"value", v}};
}

inline Json json_check(const Check& c) {
  return Json{{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}};
}

inline Json json_certificate(const Certificate& c) {
  Json j;
  j["theorem"] = theorem_tag(c.theorem);
  j["k"] = c.k;
  if (c.r) j["r"] = *c.r;
  j["s_core"] = c.s_core;
  j["s_total"] = c.s_total;
  j["admissible"] = c.admissible;
  j["hypothesis_met"] = c.hypothesis_met;
  if (!c.note.empty()) j["note"] = c.note;
  Json checks = Json::array();
  for (const auto& ch : c.checks) checks.push_back(json_check(ch));
  j["checks"] = checks;
  return j;
}

// Report envelope. Runtime-only settings (thread count, memory budget) are
// deliberately not echoed: they may never affect report bytes.
inline Json make_report(const std::string& command, Json inputs, bool deterministic) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  if (!deterministic) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
  j["inputs"] = std::move(inputs);
  return j;
}

}  // namespace vmvt
