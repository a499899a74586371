// Copyright 2026 The Kakeya Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KAKEYA_ERRORS_HPP
#define KAKEYA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kakeya {

/// Precondition violation on an argument (negative thickening, digit out of
/// range, point outside the unit cube, mismatched dimensions, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale budget ran out before the requested object could be built
/// or the requested search could finish. This never means the underlying
/// mathematics failed; it means the answer lies beyond the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kakeya

#endif  // KAKEYA_ERRORS_HPP
