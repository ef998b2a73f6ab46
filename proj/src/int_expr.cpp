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

#include "birthday/int_expr.hpp"

#include <stdexcept>
#include <string>

namespace birthday {

namespace {

[[noreturn]] void fail(std::string_view s, size_t pos, const std::string& what) {
  throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                              " in '" + std::string(s) + "': " + what);
}

size_t scan_digits(std::string_view s, size_t pos) {
  size_t end = pos;
  while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
  if (end == pos) fail(s, pos, "expected a decimal digit");
  return end;
}

}  // namespace

BigInt parse_int_expr(std::string_view s) {
  if (s.empty()) fail(s, 0, "empty input");
  size_t base_end = scan_digits(s, 0);
  BigInt base(std::string(s.substr(0, base_end)), 10);
  if (base_end == s.size()) return base;
  if (s[base_end] != '^') fail(s, base_end, "unexpected character");
  size_t exp_begin = base_end + 1;
  size_t exp_end = scan_digits(s, exp_begin);
  if (exp_end != s.size()) fail(s, exp_end, "unexpected character (only one '^' permitted)");
  BigInt exponent(std::string(s.substr(exp_begin, exp_end - exp_begin)), 10);
  if (exponent > 1000000) fail(s, exp_begin, "exponent too large (max 10^6)");
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
  return result;
}

}  // namespace birthday
