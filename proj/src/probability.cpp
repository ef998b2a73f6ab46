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

#include "birthday/probability.hpp"

#include <stdexcept>

#include "birthday/errors.hpp"

namespace birthday {

namespace {

// Exact alternating partial sum sum_{m=0}^{top} (-z)^m / m!.
Rational alternating_exp_sum(const Rational& z, long top) {
  Rational sum(1);
  Rational term(1);
  for (long m = 1; m <= top; ++m) {
    term *= z / Rational(m);
    sum += (m % 2 == 1) ? -term : term;
  }
  return sum;
}

}  // namespace

long exp_scaling_exponent(const Rational& x) {
  if (x < Rational(1)) return 0;
  long s = 1;
  while (x > Rational::pow2(s - 1)) ++s;
  return s;
}

Enclosure exp_neg_enclosure(const Rational& x, long M, long truncation_scale) {
  if (x.sign() < 0) throw std::domain_error("exp_neg_enclosure: x must be >= 0");
  if (M < 1 || M % 2 == 0) {
    throw std::domain_error("exp_neg_enclosure: M must be odd and positive");
  }
  if (truncation_scale < 1) {
    throw std::domain_error("exp_neg_enclosure: truncation scale must be >= 1");
  }
  const Rational one(1);
  const long s = exp_scaling_exponent(x);
  const Rational z = x / Rational::pow2(s);
  // e^(-z) is decreasing, so the lower sandwich evaluated at an upper
  // truncation of z (and vice versa) keeps the bracket valid while pinning
  // all series arithmetic to the decimal grid.
  const Rational z_hi = truncate_directed(z, truncation_scale, RoundingDirection::Up);
  const Rational z_lo = truncate_directed(z, truncation_scale, RoundingDirection::Down);
  Rational lo = alternating_exp_sum(z_hi, M);
  Rational hi = alternating_exp_sum(z_lo, M + 1);
  if (lo.sign() < 0) lo = Rational(0);
  if (hi > one) hi = one;
  lo = truncate_directed(lo, truncation_scale, RoundingDirection::Down);
  hi = truncate_directed(hi, truncation_scale, RoundingDirection::Up);
  if (hi > one) hi = one;
  for (long i = 0; i < s; ++i) {
    lo = truncate_directed(lo * lo, truncation_scale, RoundingDirection::Down);
    if (lo.sign() < 0) lo = Rational(0);
    hi = truncate_directed(hi * hi, truncation_scale, RoundingDirection::Up);
    if (hi > one) hi = one;
  }
  return Enclosure(lo, hi);
}

BetaEnclosureResult beta_enclosure(const BigInt& k, const BigInt& n,
                                   const BetaOptions& opts) {
  if (sgn(n) < 1) throw std::domain_error("beta_enclosure: n must be >= 1");
  if (sgn(k) < 0) throw std::domain_error("beta_enclosure: k must be >= 0");
  if (opts.target_digits < 1) {
    throw std::domain_error("beta_enclosure: target_digits must be >= 1");
  }

  BetaEnclosureResult res;
  res.k = k;
  res.n = n;
  if (k <= 1) {  // no pair of samples exists
    res.beta = Enclosure::point(Rational(0));
    res.pi = Enclosure::point(Rational(1));
    return res;
  }
  if (k > n) {  // pigeonhole
    res.beta = Enclosure::point(Rational(1));
    res.pi = Enclosure::point(Rational(0));
    return res;
  }

  const long digits = opts.target_digits;
  long N;
  if (opts.N) {
    N = *opts.N;
    if (N < 2) throw std::domain_error("beta_enclosure: N must be >= 2");
  } else {
    N = auto_select_n(k, n, Rational::pow10(-(digits + 4)), opts.auto_n_cap);
  }
  LnEnclosureResult ln = ln_pi_enclosure(k, n, N);
  const Rational L = opts.use_improved_lower ? ln.improved_lower : ln.lower;
  const Rational U = ln.upper;

  const long s = exp_scaling_exponent(U);
  const long scale = digits + 10 + s;
  const Rational exp_target = Rational::pow10(-(digits + 3));
  const Rational total_target = Rational::pow10(-digits);

  long M = 3;
  Enclosure exp_L, exp_U;
  while (true) {
    exp_L = exp_neg_enclosure(L, M, scale);
    exp_U = exp_neg_enclosure(U, M, scale);
    bool exp_ok = exp_L.width() < exp_target && exp_U.width() < exp_target;
    // With an explicit N the ln-gap is fixed and may dominate the total
    // width, so only auto-N mode enforces the end-to-end target.
    bool total_ok = opts.N.has_value() || (exp_L.hi - exp_U.lo) < total_target;
    if (exp_ok && total_ok) break;
    if (M > opts.max_m) {
      throw InapplicableError("beta_enclosure: precision unreachable within the M cap");
    }
    M = 2 * M + 1;
  }

  Rational beta_lo = Rational(1) - exp_L.hi;
  if (beta_lo.sign() < 0) beta_lo = Rational(0);
  Rational beta_hi = Rational(1) - exp_U.lo;
  if (beta_hi > Rational(1)) beta_hi = Rational(1);

  res.ln_result = std::move(ln);
  res.beta = Enclosure(beta_lo, beta_hi);
  res.pi = Enclosure(Rational(1) - res.beta.hi, Rational(1) - res.beta.lo);
  res.M_used = M;
  res.s_used = s;
  return res;
}

Enclosure beta_enclosure_m1(const BigInt& k, const BigInt& n) {
  if (k < 2) throw std::domain_error("beta_enclosure_m1: k must be >= 2");
  if (k > n) throw InapplicableError("beta_enclosure_m1: requires k <= n");
  Rational x(k * (k - 1), 2 * n);
  return Enclosure(x - x * x, x + epsilon_tail(k, n, 2));
}

}  // namespace birthday
