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

#include "birthday/rational.hpp"

namespace birthday {

inline constexpr long kDefaultAutoNCap = 10000;

/// Certified bracket of -ln(pi(k,n)), the negative log of the probability
/// that k samples out of n are all distinct:
///
///   lower < -ln(pi(k,n)) < lower + epsilon = upper,
///
/// where lower is the exact truncated series sum_{m=1}^{N-1}
/// p(k-1,m)/(m n^m) over power sums p, and epsilon is the explicit
/// geometric tail bound. improved_lower adds the certified underestimate
/// (k-1)^(N+1)/(N(N+1) n^N) of the first neglected term, so
/// lower < improved_lower < upper always.
struct LnEnclosureResult {
  BigInt k;
  BigInt n;
  long N = 2;
  Rational lower;
  Rational epsilon;
  Rational upper;
  Rational improved_lower;
};

/// Exact value of sum_{m=1}^{N-1} p(k-1,m)/(m n^m); strictly increasing in
/// N. Requires 2 <= k <= n (the log series needs every i/n < 1) and N >= 2.
Rational ln_series_lower(const BigInt& k, const BigInt& n, long N);

/// Tail bound (k-1/2)^(N+1) / (N (N+1) (1 - (k-1/2)/n) n^N), exact and
/// positive. Requires k - 1/2 < n (throws InapplicableError otherwise)
/// and N >= 2. Consecutive values satisfy
/// epsilon(N+1)/epsilon(N) = (k-1/2)/n * N/(N+2), so the bound decays
/// geometrically.
Rational epsilon_tail(const BigInt& k, const BigInt& n, long N);

LnEnclosureResult ln_pi_enclosure(const BigInt& k, const BigInt& n, long N);

/// Smallest tried N (scanning upward from 2, with a geometric jump when the
/// target is far) such that epsilon_tail(k, n, N) < target_width. The
/// returned N always passes the exact check. Throws InapplicableError once
/// the cap is passed — this happens when (k-1/2)/n is close to 1, where the
/// exact product oracle is the right tool instead.
long auto_select_n(const BigInt& k, const BigInt& n, const Rational& target_width,
                   long cap = kDefaultAutoNCap);

}  // namespace birthday
