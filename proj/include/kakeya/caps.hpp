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

#ifndef KAKEYA_CAPS_HPP
#define KAKEYA_CAPS_HPP

namespace kakeya {

/// Desk-scale construction budgets.
struct Caps {
  int stage_k = 8;     ///< fractal stage squares (4^k of them)
  int line_set_k = 4;  ///< H regions, h(t, k), k_index searches
  int sprout_k = 6;    ///< standalone Perron trees
  int kakeya_j = 2;    ///< Kakeya stages (|S_2| = 2048)

  /// Defaults, with KAKEYA_LAB_CAP_K overriding line_set_k and
  /// KAKEYA_LAB_CAP_J overriding kakeya_j.
  static Caps from_env();
};

}  // namespace kakeya

#endif  // KAKEYA_CAPS_HPP
