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

#include <string_view>

#include "birthday/rational.hpp"

namespace birthday {

/// Parses "DECIMAL" or "DECIMAL^DECIMAL" (a single power, no whitespace)
/// into an exact nonnegative integer, e.g. "365" or "2^128". Exponents are
/// capped at 10^6 as a resource guard. Throws std::invalid_argument with
/// the offending position on malformed input.
BigInt parse_int_expr(std::string_view s);

}  // namespace birthday
