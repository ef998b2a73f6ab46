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

#include "birthday/enclosure.hpp"
#include "birthday/rational.hpp"

namespace birthday {

inline constexpr unsigned long kDefaultExactPiCap = 10000;

/// Exact no-collision probability pi(k,n) = prod_{i=1}^{k-1} (1 - i/n).
/// Returns 1 for k <= 1 (empty product) and 0 for k > n. Denominators reach
/// n^(k-1), so k is capped (default 10000); past the cap an
/// InapplicableError points at enclosed_pi_product.
Rational exact_pi(const BigInt& k, const BigInt& n,
                  unsigned long max_k = kDefaultExactPiCap);

/// Mid-scale oracle: directed product of the k-1 factors, each endpoint
/// truncated at scale digits + ceil(log10 k) + 5, giving an enclosure of
/// pi(k,n) of width < 10^(-digits) in O(k) truncated multiplications.
Enclosure enclosed_pi_product(const BigInt& k, const BigInt& n, long digits);

/// Expected number of colliding pairs among k samples from n values:
/// exactly k(k-1)/(2n).
Rational expected_collisions(const BigInt& k, const BigInt& n);

/// Enclosure of the correction factor pi(k,n) in the identity
/// C(n,k) = n^k/k! * pi(k,n). The exact value C(n,k) k!/n^k always lies in
/// the returned interval.
Enclosure binom_pi_factor(const BigInt& k, const BigInt& n, long target_digits);

/// Probabilities for the orbit of a fixed point x under a uniformly random
/// function f on n elements, where the orbit is the set of distinct values
/// seen when iterating f from x until the first repeat:
///   P(orbit size == k) = pi(k,n) * k/n,
///   P(orbit size >  k) = pi(k+1,n)   (equivalently P(size >= k) = pi(k,n)).
/// Both are exact rationals while the exact oracle cap allows, otherwise
/// certified enclosures scaled by the exact k/n.
struct OrbitProbabilities {
  BigInt n;
  BigInt k;
  Enclosure p_exact_size;    // P(orbit size == k)
  Enclosure p_size_greater;  // P(orbit size > k)
  bool exact = false;        // true when both enclosures are points
};

OrbitProbabilities orbit_size_probabilities(const BigInt& k, const BigInt& n,
                                            long target_digits,
                                            unsigned long max_exact_k = kDefaultExactPiCap);

}  // namespace birthday
