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

#include "birthday/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace birthday {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_string(std::string_view s) {
  std::string_view rest = s;
  bool neg = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    neg = rest.front() == '-';
    rest.remove_prefix(1);
  }
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("invalid rational literal: '" + std::string(s) + "'");
  };

  size_t slash = rest.find('/');
  size_t dot = rest.find('.');
  Rational r;
  if (slash != std::string_view::npos) {
    std::string_view ns = rest.substr(0, slash);
    std::string_view ds = rest.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) throw bad();
    BigInt den(std::string(ds), 10);
    if (sgn(den) == 0) throw bad();
    r = Rational(BigInt(std::string(ns), 10), den);
  } else if (dot != std::string_view::npos) {
    std::string_view is = rest.substr(0, dot);
    std::string_view fs = rest.substr(dot + 1);
    if (!all_digits(is) || !all_digits(fs)) throw bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fs.size());
    BigInt num = BigInt(std::string(is), 10) * scale + BigInt(std::string(fs), 10);
    r = Rational(num, scale);
  } else {
    if (!all_digits(rest)) throw bad();
    r = Rational(BigInt(std::string(rest), 10));
  }
  return neg ? -r : r;
}

Rational Rational::pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational Rational::pow10(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
  Rational r;
  r.q_ = mpq_class(n, d);  // already canonical: gcd(a,b)=1 implies gcd(a^e,b^e)=1
  return r;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

Rational truncate_directed(const Rational& x, long scale, RoundingDirection dir) {
  if (scale < 1) throw std::domain_error("truncate_directed: scale must be >= 1");
  BigInt grid;
  mpz_ui_pow_ui(grid.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  BigInt scaled = x.num() * grid;
  BigInt q;
  if (dir == RoundingDirection::Down) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  }
  return Rational(q, grid);
}

double approx_log10(const Rational& x) {
  signed long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, x.num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.den().get_mpz_t());
  constexpr double kLog10Of2 = 0.301029995663981195;
  return std::log10(std::fabs(mn) / md) + static_cast<double>(en - ed) * kLog10Of2;
}

}  // namespace birthday
