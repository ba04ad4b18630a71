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

#include "vmvt/arith/errors.hpp"
#include "vmvt/arith/integer.hpp"
#include "vmvt/arith/interval.hpp"
#include "vmvt/arith/quadext.hpp"
#include "vmvt/arith/rational.hpp"

namespace vmvt {

// Enclosure of a quadratic-extension value.
inline CertInterval to_interval(const QuadExt& q, mpfr_prec_t prec = kDefaultPrecision) {
  CertInterval r = CertInterval::of(q.rational_part(), prec);
  if (!q.is_rational()) {
    CertInterval surd = CertInterval::of(q.surd_part(), prec);
    CertInterval root = CertInterval::of(q.radicand(), prec).sqrt();
    r = r + surd * root;
  }
  return r;
}

}  // namespace vmvt
