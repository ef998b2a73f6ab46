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

#include <stdexcept>
#include <utility>

#include "birthday/rational.hpp"

namespace birthday {

/// Two-sided certified bracket [lo, hi] for a real quantity. Producers
/// guarantee lo <= hi and that the described quantity lies inside;
/// consumers may widen but never narrow without mathematical cause.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure() = default;
  Enclosure(Rational lower, Rational upper)
      : lo(std::move(lower)), hi(std::move(upper)) {
    if (hi < lo) throw std::logic_error("Enclosure: lo > hi");
  }

  static Enclosure point(const Rational& v) { return Enclosure(v, v); }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Enclosure& inner) const {
    return lo <= inner.lo && inner.hi <= hi;
  }
  bool intersects(const Enclosure& other) const {
    return !(hi < other.lo || other.hi < lo);
  }
};

}  // namespace birthday
