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

#include "birthday/render.hpp"

#include <cmath>
#include <stdexcept>

namespace birthday {

std::string render_decimal(const Rational& x, long digits, RoundingDirection dir) {
  if (digits < 1) throw std::domain_error("render_decimal: digits must be >= 1");
  BigInt grid;
  mpz_ui_pow_ui(grid.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = x.num() * grid;
  BigInt q;
  if (dir == RoundingDirection::Down) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  }
  bool neg = sgn(q) < 0;
  BigInt a = ::abs(q);
  std::string s = a.get_str();
  if (static_cast<long>(s.size()) <= digits) {
    s.insert(0, static_cast<size_t>(digits + 1 - static_cast<long>(s.size())), '0');
  }
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return neg ? "-" + s : s;
}

namespace {

struct Log2Fraction {
  bool ok = false;
  Rational lo;  // certified lower bound on log2(t)
  Rational hi;  // certified upper bound on log2(t)
};

// Extracts `bits` binary digits of log2(t) for t in [1,2). Two mantissa
// sequences run side by side: u truncated Down and v truncated Up at the
// given decimal guard scale, so the accumulated binary fractions F and G
// satisfy F <= log2(t) < G + 2^-bits. Soundness rests on the invariants
//   u_j <= t^(2^j) / 2^(2^j * F_j)   and   v_j >= t^(2^j) / 2^(2^j * G_j),
// preserved by directed truncation, halving on the 1-bit branch, and the
// cap v <= 2. The lower invariant yields F <= log2(t) only while u stays
// >= 1; excessive truncation loss is reported as !ok and the caller retries
// with a larger guard.
Log2Fraction extract_log2_fraction(const Rational& t, long bits, long guard) {
  const Rational one(1), two(2);
  Rational u = truncate_directed(t, guard, RoundingDirection::Down);
  Rational v = truncate_directed(t, guard, RoundingDirection::Up);
  if (v > two) v = two;
  BigInt flo_bits(0), fhi_bits(0);
  for (long j = 0; j < bits; ++j) {
    u = truncate_directed(u * u, guard, RoundingDirection::Down);
    flo_bits <<= 1;
    if (u >= two) {
      flo_bits += 1;
      u /= two;
    }
    v = truncate_directed(v * v, guard, RoundingDirection::Up);
    fhi_bits <<= 1;
    if (v >= two) {
      fhi_bits += 1;
      v /= two;
      if (v > two) v = two;
    }
  }
  Log2Fraction out;
  if (u < one) return out;  // precision exhausted; retry with larger guard
  Rational scale = Rational::pow2(-bits);
  out.ok = true;
  out.lo = Rational(flo_bits) * scale;
  out.hi = Rational(fhi_bits + 1) * scale;
  return out;
}

}  // namespace

std::string render_log2_exponent(const Rational& x, long frac_digits,
                                 RoundingDirection dir) {
  if (frac_digits < 1) {
    throw std::domain_error("render_log2_exponent: frac_digits must be >= 1");
  }
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw std::domain_error("render_log2_exponent: requires 0 < x < 1");
  }

  // Normalize x * 2^E = t in [1, 2). The bit-size difference lands within
  // one step of the right E; fix up exactly.
  long e_num = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2));
  long e_den = static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  long E = e_den - e_num;
  Rational t = x * Rational::pow2(E);
  while (t < Rational(1)) {
    t *= Rational(2);
    ++E;
  }
  while (t >= Rational(2)) {
    t /= Rational(2);
    --E;
  }

  long bits = (frac_digits + 3) * 10 / 3 + 10;
  const Rational tol = Rational::pow10(-(frac_digits + 2));
  for (int attempt = 0; attempt < 10; ++attempt, bits *= 2) {
    long guard = static_cast<long>(std::ceil(0.30103 * (2.0 * bits + 5.0))) + 10;
    Log2Fraction f = extract_log2_fraction(t, bits, guard);
    if (!f.ok) continue;
    Rational y_lo = Rational(E) - f.hi;  // -log2(x) bracket
    Rational y_hi = Rational(E) - f.lo;
    if (y_lo.sign() < 0) y_lo = Rational(0);  // -log2(x) > 0; slack only
    if (y_hi - y_lo > tol) continue;
    // Lower bound on x (Down): need 2^(-e) <= x, i.e. e >= -log2(x).
    return dir == RoundingDirection::Down
               ? render_decimal(y_hi, frac_digits, RoundingDirection::Up)
               : render_decimal(y_lo, frac_digits, RoundingDirection::Down);
  }
  throw std::runtime_error("render_log2_exponent: digit extraction did not converge");
}

}  // namespace birthday
