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

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace birthday {

using BigInt = mpz_class;

/// Direction for grid snapping: Down never increases a value, Up never
/// decreases one.
enum class RoundingDirection { Down, Up };

/// Exact arbitrary-precision rational. Invariants: denominator > 0 and
/// gcd(|num|, den) == 1 at all times. Arithmetic never loses precision;
/// anything that must shrink a value goes through truncate_directed and
/// states its direction.
///
/// Immutable in spirit: all operations produce new values, so instances
/// can be shared across threads freely.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(static_cast<signed long>(v)) {}  // NOLINT: implicit by design
  Rational(const BigInt& v) : q_(v) {}                   // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Accepts "123", "-4/7", "0.0273972" (exact decimal). Throws
  /// std::invalid_argument on anything else.
  static Rational from_string(std::string_view s);

  static Rational pow2(long e);   // 2^e, e may be negative
  static Rational pow10(long e);  // 10^e, e may be negative

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return ::cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return ::cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// x^e for e >= 0. Exact; a reduced fraction stays reduced under
  /// componentwise powering.
  Rational pow(unsigned long e) const;

  BigInt floor() const;
  BigInt ceil() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

 private:
  mpq_class q_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Snaps x to the grid of multiples of 10^(-scale), toward the requested
/// direction. |result - x| < 10^(-scale); the result's denominator divides
/// 10^scale. Exact multiples are fixed points.
Rational truncate_directed(const Rational& x, long scale, RoundingDirection dir);

/// Coarse base-10 logarithm of |x| (a few ulps of double accuracy), for
/// heuristics only — never for certified decisions. x must be nonzero.
double approx_log10(const Rational& x);

}  // namespace birthday
