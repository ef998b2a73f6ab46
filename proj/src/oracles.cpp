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

#include "birthday/oracles.hpp"

#include <stdexcept>
#include <string>

#include "birthday/errors.hpp"
#include "birthday/probability.hpp"

namespace birthday {

namespace {

void check_query(const BigInt& k, const BigInt& n) {
  if (sgn(k) < 0) throw std::domain_error("k must be >= 0");
  if (sgn(n) < 1) throw std::domain_error("n must be >= 1");
}

unsigned long as_ulong_count(const BigInt& k, const char* who) {
  if (!k.fits_ulong_p()) {
    throw InapplicableError(std::string(who) + ": k too large for an O(k) product");
  }
  return k.get_ui();
}

}  // namespace

Rational exact_pi(const BigInt& k, const BigInt& n, unsigned long max_k) {
  check_query(k, n);
  if (k <= 1) return Rational(1);
  if (k > n) return Rational(0);
  if (k > BigInt(max_k)) {
    throw InapplicableError(
        "exact_pi: k exceeds the exact-oracle cap (" + std::to_string(max_k) +
        "); use enclosed_pi_product or beta_enclosure instead");
  }
  const unsigned long kk = as_ulong_count(k, "exact_pi");
  BigInt num(1);
  for (unsigned long i = 1; i < kk; ++i) {
    num *= n - i;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), n.get_mpz_t(), kk - 1);
  return Rational(num, den);
}

Enclosure enclosed_pi_product(const BigInt& k, const BigInt& n, long digits) {
  check_query(k, n);
  if (digits < 1) throw std::domain_error("enclosed_pi_product: digits must be >= 1");
  if (k > n) throw std::domain_error("enclosed_pi_product: requires k <= n");
  if (k <= 1) return Enclosure::point(Rational(1));
  const unsigned long kk = as_ulong_count(k, "enclosed_pi_product");
  const long scale =
      digits + static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 10)) + 5;
  Rational lo(1), hi(1);
  for (unsigned long i = 1; i < kk; ++i) {
    Rational factor(n - i, n);
    lo = truncate_directed(lo * factor, scale, RoundingDirection::Down);
    hi = truncate_directed(hi * factor, scale, RoundingDirection::Up);
  }
  return Enclosure(lo, hi);
}

Rational expected_collisions(const BigInt& k, const BigInt& n) {
  check_query(k, n);
  return Rational(k * (k - 1), 2 * n);
}

Enclosure binom_pi_factor(const BigInt& k, const BigInt& n, long target_digits) {
  check_query(k, n);
  if (k > n) throw std::domain_error("binom_pi_factor: requires 0 <= k <= n");
  return enclosed_pi_product(k, n, target_digits);
}

OrbitProbabilities orbit_size_probabilities(const BigInt& k, const BigInt& n,
                                            long target_digits,
                                            unsigned long max_exact_k) {
  check_query(k, n);
  if (k < 1 || k > n) {
    throw std::domain_error("orbit_size_probabilities: requires 1 <= k <= n");
  }
  OrbitProbabilities out;
  out.n = n;
  out.k = k;
  const Rational ratio(k, n);
  if (k + 1 <= BigInt(max_exact_k)) {
    Rational pi_k = exact_pi(k, n, max_exact_k);
    Rational pi_k1 = exact_pi(k + 1, n, max_exact_k);
    out.p_exact_size = Enclosure::point(pi_k * ratio);
    out.p_size_greater = Enclosure::point(pi_k1);
    out.exact = true;
    return out;
  }
  BetaOptions opts;
  opts.target_digits = target_digits;
  BetaEnclosureResult at_k = beta_enclosure(k, n, opts);
  BetaEnclosureResult at_k1 = beta_enclosure(k + 1, n, opts);
  out.p_exact_size = Enclosure(at_k.pi.lo * ratio, at_k.pi.hi * ratio);
  out.p_size_greater = at_k1.pi;
  out.exact = false;
  return out;
}

}  // namespace birthday
