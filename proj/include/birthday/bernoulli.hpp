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

#include "birthday/rational.hpp"

namespace birthday {

/// Bernoulli number B^m under the B^1 = +1/2 sign convention, i.e. the
/// solution of the formal relation "B^n = (B-1)^n" for n > 1.
///
/// WARNING for porters: most tables use the other convention, B_1 = -1/2.
/// This library needs B^1 = +1/2 so that the Faulhaber expansion of
/// ((k+B)^(m+1) - B^(m+1)) / (m+1) sums i^m over i = 1..k (inclusive),
/// not 0..k-1.
///
/// Values are memoized in a grow-only table: computing up to index M costs
/// O(M^2) rational operations once, later queries are table lookups.
/// Concurrent first queries serialize on the table; results are identical
/// regardless of interleaving.
Rational bernoulli(unsigned long m);

}  // namespace birthday
