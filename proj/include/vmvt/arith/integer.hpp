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

#include <gmpxx.h>

#include <string>

#include "vmvt/arith/errors.hpp"

namespace vmvt {

// Arbitrary-precision integer. GMP supplies the limb arithmetic; everything
// layered on top of it in this project is exact by construction.
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// floor(sqrt(n)), n >= 0. mpz_sqrt is an exact integer Newton iteration;
// no floating point is involved at any stage.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw HypothesisError("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int isqrt_ceil(const Int& n) {
  if (n < 0) throw HypothesisError("isqrt of negative integer");
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) r += 1;
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// floor(n^(1/e)), n >= 0, e >= 1.
inline Int iroot_floor(const Int& n, unsigned long e) {
  if (n < 0) throw HypothesisError("iroot of negative integer");
  if (e == 0) throw HypothesisError("iroot with zero index");
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), e);
  return r;
}

inline Int iroot_ceil(const Int& n, unsigned long e) {
  Int r = iroot_floor(n, e);
  if (int_pow(r, e) != n) r += 1;
  return r;
}

// ceil(2*sqrt(k)) == ceil(sqrt(4k)), decided exactly.
inline Int ceil_two_sqrt(const Int& k) { return isqrt_ceil(4 * k); }

// ceil(k^(1/3)), decided exactly.
inline Int ceil_cbrt(const Int& k) { return iroot_ceil(k, 3); }

inline std::string to_string(const Int& n) { return n.get_str(); }

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw Error("integer does not fit a machine word: " + n.get_str());
  return n.get_si();
}

}  // namespace vmvt
