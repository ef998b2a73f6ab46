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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "birthday/rational.hpp"

namespace birthday {

enum class CliCommand { Bound, Exact, Expected, Bernoulli, PowerSum, BinomFactor, Orbit };
enum class OutputFormat { Decimal, Rational, Log2 };

/// A fully validated request. k and n come from big-integer expressions
/// ("2^128"); digits defaults to 10; N is auto unless given; output is
/// line-oriented key=value text.
struct CliRequest {
  CliCommand command = CliCommand::Bound;
  BigInt k;
  BigInt n;
  long m = 0;  // bernoulli / powersum exponent
  long digits = 10;
  std::optional<long> N;  // nullopt = auto
  OutputFormat format = OutputFormat::Decimal;
  bool improved_lower = false;
  long auto_n_cap;               // set from default or BIRTHDAY_BOUNDS_MAX_N
  unsigned long max_exact_k;     // exact-oracle cap (flag-overridable)

  CliRequest();
};

/// Executes a validated request. Exit codes: 0 success, 2 invalid input,
/// 3 inapplicable parameters (tail bound needs k - 1/2 < n; precision or
/// size caps exceeded). Errors are written to err, results to out.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without argv[0]) and runs the request.
/// Honors the BIRTHDAY_BOUNDS_MAX_N environment variable as an override of
/// the auto-N cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace birthday
