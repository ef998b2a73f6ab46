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

#include "birthday/faulhaber.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "birthday/bernoulli.hpp"

namespace birthday {

namespace {

std::mutex cache_mutex;
std::vector<std::shared_ptr<const FaulhaberPoly>>& cache() {
  static std::vector<std::shared_ptr<const FaulhaberPoly>> c;
  return c;
}

std::shared_ptr<const FaulhaberPoly> build_poly(unsigned long m) {
  auto poly = std::make_shared<FaulhaberPoly>();
  poly->power = m;
  poly->coeffs.resize(m + 1);
  Rational inv_mp1(1, static_cast<long>(m + 1));
  BigInt binom(1);  // C(m+1, j), walked from j = 0
  for (unsigned long j = 0; j <= m + 1; ++j) {
    if (j >= 1) {
      poly->coeffs[j - 1] = Rational(binom) * bernoulli(m + 1 - j) * inv_mp1;
    }
    if (j <= m) {
      binom *= static_cast<unsigned long>(m + 1 - j);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
    }
  }
  return poly;
}

std::shared_ptr<const FaulhaberPoly> cached_poly(unsigned long m) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& c = cache();
  if (c.size() <= m) c.resize(m + 1);
  if (!c[m]) c[m] = build_poly(m);
  return c[m];
}

}  // namespace

Rational FaulhaberPoly::eval(const BigInt& k) const {
  Rational kq(k);
  Rational acc = coeffs.back();
  for (size_t j = coeffs.size() - 1; j-- > 0;) {
    acc = acc * kq + coeffs[j];
  }
  return acc * kq;
}

FaulhaberPoly faulhaber_poly(unsigned long m) {
  if (m < 1) throw std::domain_error("faulhaber_poly: m must be >= 1");
  return *cached_poly(m);
}

Rational power_sum(const BigInt& k, unsigned long m) {
  if (m < 1) throw std::domain_error("power_sum: m must be >= 1");
  if (sgn(k) < 0) throw std::domain_error("power_sum: k must be >= 0");
  Rational value = cached_poly(m)->eval(k);
  if (!value.is_integer()) {
    throw std::logic_error("power_sum: non-integral value (broken invariant)");
  }
  return value;
}

}  // namespace birthday
