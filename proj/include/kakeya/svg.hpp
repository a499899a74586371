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

#ifndef KAKEYA_SVG_HPP
#define KAKEYA_SVG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kakeya/geometry.hpp"

namespace kakeya::svg {

/// Version of the fixed style table; bump when colors or strokes change.
inline constexpr std::string_view kStyleVersion = "v1";

/// Named styles: "ink" (solid black), "shade" (grey), "outline" (red stroke,
/// no fill), "window" (thin dashed frame).
struct Layer {
  std::string style;
  Region region;
};

/// Decimal text of q rounded half away from zero to `digits` places, exact
/// (no floating point), trailing zeros kept.
std::string fixed_decimal(const Rational& q, int digits = 12);

/// Deterministic SVG document. The viewBox is the bounding box of all
/// layers plus a 5% margin; y points up. Parts are drawn in canonical
/// (lexicographic vertex) order. Unknown styles throw DomainError.
std::string emit_svg(const std::vector<Layer>& layers, std::string_view title);

}  // namespace kakeya::svg

#endif  // KAKEYA_SVG_HPP
