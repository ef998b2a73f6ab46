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

#include <string>

#include "birthday/rational.hpp"

namespace birthday {

/// Decimal string with exactly `digits` fractional digits, snapped in the
/// requested direction: the printed value is <= x for Down and >= x for Up,
/// and differs from x by less than 10^(-digits). '.' separator, no
/// grouping, no exponent notation. Any sign is accepted.
std::string render_decimal(const Rational& x, long digits, RoundingDirection dir);

/// Reports x in (0,1) as 2^(-e) and returns e rendered with `frac_digits`
/// fractional digits. `dir` is the certified direction ON X — note the sign
/// flip: a lower bound on x (Down) requires e rounded up, an upper bound on
/// x (Up) requires e rounded down. Guarantee: 2^(-e_printed) <= x for Down,
/// >= x for Up, and |e_printed - (-log2 x)| < 10^(-frac_digits) + the grid
/// step, i.e. the printed digits are at most one final-digit step away from
/// the true exponent.
///
/// Implementation: normalize x = t * 2^(-E) with t in [1,2), then extract
/// binary digits of log2(t) by repeated squaring, running one mantissa
/// sequence truncated Down and one truncated Up so the extracted fraction
/// is a certified two-sided bracket. The guard scale and bit count are
/// re-checked after extraction and raised on the rare shortfall.
std::string render_log2_exponent(const Rational& x, long frac_digits,
                                 RoundingDirection dir);

}  // namespace birthday
