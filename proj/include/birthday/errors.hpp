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
#include <string>

namespace birthday {

/// Raised when a request is well-formed but the method cannot serve it:
/// the tail bound needs k - 1/2 < n, a precision target is unreachable
/// under the configured cap, or an exact oracle would exceed its size cap.
/// The CLI maps this to exit code 3; plain std::domain_error /
/// std::invalid_argument (malformed input) map to exit code 2.
class InapplicableError : public std::domain_error {
 public:
  explicit InapplicableError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace birthday
