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

#include <vector>

#include "birthday/rational.hpp"

namespace birthday {

/// Polynomial identity for the power sum: sum_{i=1}^{k} i^m equals
/// sum_{j=1}^{m+1} coeffs[j-1] * k^j. There is no constant term (the sum
/// vanishes at k = 0); the leading coefficient is 1/(m+1) and the k^m
/// coefficient is 1/2.
struct FaulhaberPoly {
  unsigned long power = 1;        // the exponent m being summed
  std::vector<Rational> coeffs;   // coeffs[j] multiplies k^(j+1); size m+1

  unsigned long degree() const { return power + 1; }

  /// Exact evaluation at integer k (Horner).
  Rational eval(const BigInt& k) const;
};

/// Coefficients of the degree-(m+1) polynomial above, m >= 1. The k^j
/// coefficient is C(m+1, j) * B^(m+1-j) / (m+1) with B^* the Bernoulli
/// numbers under the B^1 = +1/2 convention (see bernoulli.hpp).
/// Results are memoized.
FaulhaberPoly faulhaber_poly(unsigned long m);

/// sum_{i=1}^{k} i^m for k >= 0, m >= 1, evaluated through the polynomial.
/// The result is integral; the returned Rational has denominator 1.
Rational power_sum(const BigInt& k, unsigned long m);

}  // namespace birthday
