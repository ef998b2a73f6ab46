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

#include "birthday/tail_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "birthday/errors.hpp"
#include "birthday/faulhaber.hpp"

namespace birthday {

namespace {

void check_kn(const BigInt& k, const BigInt& n, long N) {
  if (N < 2) throw std::domain_error("tail bounds: N must be >= 2");
  if (k < 2) throw std::domain_error("tail bounds: k must be >= 2 (k <= 1 is degenerate)");
  if (k > n) {
    throw InapplicableError("tail bounds: require k <= n (series terms i/n reach 1)");
  }
}

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

Rational ln_series_lower(const BigInt& k, const BigInt& n, long N) {
  check_kn(k, n, N);
  const BigInt km1 = k - 1;
  Rational sum(0);
  BigInt npow(1);
  for (long m = 1; m <= N - 1; ++m) {
    npow *= n;
    Rational term(power_sum(km1, static_cast<unsigned long>(m)).num(),
                  BigInt(m) * npow);
    sum += term;
  }
  return sum;
}

Rational epsilon_tail(const BigInt& k, const BigInt& n, long N) {
  if (N < 2) throw std::domain_error("epsilon_tail: N must be >= 2");
  if (k < 1) throw std::domain_error("epsilon_tail: k must be >= 1");
  const BigInt two_k_minus_1 = 2 * k - 1;
  const BigInt slack = 2 * n - two_k_minus_1;  // 2n - 2k + 1
  if (sgn(slack) <= 0) {
    throw InapplicableError("epsilon_tail: tail bound inapplicable, needs k - 1/2 < n");
  }
  // (k-1/2)^(N+1) / (N (N+1) (1-(k-1/2)/n) n^N)
  //   = (2k-1)^(N+1) / (2^N N (N+1) (2n-2k+1) n^(N-1))
  BigInt num = pow_big(two_k_minus_1, static_cast<unsigned long>(N + 1));
  BigInt den = pow_big(BigInt(2), static_cast<unsigned long>(N)) * BigInt(N) *
               BigInt(N + 1) * slack * pow_big(n, static_cast<unsigned long>(N - 1));
  return Rational(num, den);
}

LnEnclosureResult ln_pi_enclosure(const BigInt& k, const BigInt& n, long N) {
  check_kn(k, n, N);
  LnEnclosureResult r;
  r.k = k;
  r.n = n;
  r.N = N;
  r.lower = ln_series_lower(k, n, N);
  r.epsilon = epsilon_tail(k, n, N);
  r.upper = r.lower + r.epsilon;
  // First neglected term is p(k-1,N)/(N n^N) >= (k-1)^(N+1)/((N+1) N n^N).
  BigInt num = pow_big(k - 1, static_cast<unsigned long>(N + 1));
  BigInt den = BigInt(N) * BigInt(N + 1) * pow_big(n, static_cast<unsigned long>(N));
  r.improved_lower = r.lower + Rational(num, den);
  return r;
}

long auto_select_n(const BigInt& k, const BigInt& n, const Rational& target_width,
                   long cap) {
  check_kn(k, n, 2);
  if (target_width.sign() <= 0) {
    throw std::domain_error("auto_select_n: target width must be positive");
  }
  if (cap < 2) throw std::domain_error("auto_select_n: cap must be >= 2");

  const BigInt two_k_minus_1 = 2 * k - 1;
  const BigInt two_n = 2 * n;
  // Conservative per-step decay: eps(N+1)/eps(N) = (2k-1)/(2n) * N/(N+2)
  // <= (2k-1)/(2n) =: r, used only to decide how far to jump.
  const double log10_r = approx_log10(Rational(two_k_minus_1, two_n));

  long N = 2;
  Rational eps = epsilon_tail(k, n, N);
  while (true) {
    if (eps < target_width) return N;
    if (N >= cap) {
      throw InapplicableError(
          "auto_select_n: precision unreachable within the N cap (" +
          std::to_string(cap) +
          "); (k-1/2)/n is too close to 1 — use the exact product oracle "
          "(`exact` / exact_pi) instead");
    }
    double gap = approx_log10(eps) - approx_log10(target_width);
    long steps = (log10_r < -1e-12) ? static_cast<long>(gap / -log10_r) : 1;
    if (steps > 64) {
      long jump = std::min(N + steps - 2, cap);
      N = jump;
      eps = epsilon_tail(k, n, N);
    } else {
      eps *= Rational(two_k_minus_1 * N, two_n * (N + 2));
      ++N;
    }
  }
}

}  // namespace birthday
