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

#include "birthday/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace birthday {

namespace {

std::mutex table_mutex;
std::vector<Rational>& table() {
  static std::vector<Rational> t = {Rational(1), Rational(1, 2)};
  return t;
}

// Expanding "B^n = (B-1)^n" and cancelling B^n leaves
//   0 = sum_{j=0}^{n-1} C(n,j) (-1)^(n-j) B^j,
// whose j = n-1 term is -n B^(n-1). Solving with n = t+1:
//   B^t = (1/(t+1)) * sum_{j=0}^{t-1} C(t+1,j) (-1)^(t+1-j) B^j.
Rational next_bernoulli(const std::vector<Rational>& known, unsigned long t) {
  Rational sum(0);
  BigInt binom(1);  // C(t+1, j), updated along the row
  for (unsigned long j = 0; j < t; ++j) {
    if (!known[j].is_zero()) {
      Rational term = Rational(binom) * known[j];
      bool negative = ((t + 1 - j) % 2) == 1;
      sum += negative ? -term : term;
    }
    binom *= static_cast<unsigned long>(t + 1 - j);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
  }
  return sum / Rational(static_cast<long>(t + 1));
}

}  // namespace

Rational bernoulli(unsigned long m) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& t = table();
  while (t.size() <= m) {
    t.push_back(next_bernoulli(t, t.size()));
  }
  return t[m];
}

}  // namespace birthday
