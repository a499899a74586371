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

#include "kakeya/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "kakeya/errors.hpp"

namespace kakeya {
namespace {

void override_from(const char* name, int& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view text{raw};
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0) {
    throw DomainError(std::string(name) + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  slot = value;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  override_from("KAKEYA_LAB_CAP_K", caps.line_set_k);
  override_from("KAKEYA_LAB_CAP_J", caps.kakeya_j);
  return caps;
}

}  // namespace kakeya
