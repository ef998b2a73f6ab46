// Copyright 2026 The birthday-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>

#include "birthday/enclosure.hpp"
#include "birthday/rational.hpp"
#include "birthday/tail_bounds.hpp"

namespace birthday {

/// Certified bracket of e^(-x) for x >= 0, from the alternating-series
/// sandwich: for 0 <= z < 1 and odd M,
///   sum_{m=0}^{M} (-z)^m/m!  <  e^(-z)  <  sum_{m=0}^{M+1} (-z)^m/m!.
/// For x >= 1 the argument is scaled to z = x/2^s <= 1/2 (s minimal) and
/// both endpoints are raised back by s squarings; t -> t^2 is monotone on
/// (0,1), so directedness survives. Endpoints are truncated Down/Up at
/// `truncation_scale` between squarings to keep sizes bounded; the width
/// shrinks as M grows.
Enclosure exp_neg_enclosure(const Rational& x, long M, long truncation_scale);

/// The s used by exp_neg_enclosure for this argument: 0 for x < 1, else
/// the smallest s with x/2^s <= 1/2.
long exp_scaling_exponent(const Rational& x);

struct BetaOptions {
  std::optional<long> N;        // nullopt = auto-select against the width target
  long target_digits = 10;      // certified at the matching decimal scale
  bool use_improved_lower = false;
  long auto_n_cap = kDefaultAutoNCap;
  long max_m = 1 << 20;
};

/// Certified bounds for the collision probability beta(k,n) and its
/// complement pi(k,n). Degenerate parameters short-circuit exactly:
/// k <= 1 gives beta = [0,0], k > n gives beta = [1,1] (pigeonhole); both
/// leave ln_result empty. Otherwise the Theorem-style ln-bracket [L,U] is
/// mapped through the exponential sandwich: beta in
/// [1 - hi(exp(-L)), 1 - lo(exp(-U))], and pi is the exact complement
/// interval. M starts at 3 and doubles to the next odd value until each
/// exponential bracket is narrower than 10^-(target_digits+3); in auto-N
/// mode the total beta width is additionally driven under
/// 10^-target_digits.
struct BetaEnclosureResult {
  BigInt k;
  BigInt n;
  std::optional<LnEnclosureResult> ln_result;
  Enclosure beta;
  Enclosure pi;
  long M_used = 0;  // 0 in the degenerate cases
  long s_used = 0;
};

BetaEnclosureResult beta_enclosure(const BigInt& k, const BigInt& n,
                                   const BetaOptions& opts = {});

/// The closed-form O(1) bracket obtained from the first-order sandwich:
///   x - x^2  <  beta(k,n)  <  x + (k-1/2)^3 / (6 n^2 (1-(k-1/2)/n)),
/// with x = k(k-1)/(2n). Requires 2 <= k <= n. Cheap but wide; the lower
/// endpoint may be negative and the upper may exceed 1 for large x.
Enclosure beta_enclosure_m1(const BigInt& k, const BigInt& n);

}  // namespace birthday
