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

#ifndef KAKEYA_JSON_IO_HPP
#define KAKEYA_JSON_IO_HPP

/// @file json_io.hpp
/// @brief Canonical JSON encodings.
///
/// Rationals travel as strings ("1/24", "-3"), never as JSON numbers.
/// Objects are key-sorted, so encode(decode(text)) == text for any text this
/// module produced. Decoders throw ParseError on malformed input.

#include <string>
#include <string_view>

#include <json.hpp>

#include "kakeya/caps.hpp"
#include "kakeya/dual_fractal.hpp"
#include "kakeya/geometry.hpp"
#include "kakeya/martingale.hpp"
#include "kakeya/perron.hpp"

namespace kakeya::io {

using Json = nlohmann::json;

/// Compact canonical text.
std::string dump(const Json& j);
/// Throws ParseError on invalid JSON.
Json parse(std::string_view text);

Json to_json(const Rational& q);
Json to_json(const Point2& p);
Json to_json(const AxisBox& b);
Json to_json(const ConvexPoly& p);
Json to_json(const Region& r);
Json to_json(const fractal::Square& s);
Json to_json(const perron::Triangle& t);
Json to_json(const perron::LabeledTriangle& t);
Json to_json(const perron::SproutResult& s);
/// Counts, eps, areas and the triangle list.
Json to_json(const perron::KakeyaStage& st);
Json to_json(const mg::DyadicCube& q);
Json to_json(const mg::Spec& m);
Json to_json(const mg::CapitalTrace& t);

Rational rational_from(const Json& j);
Point2 point_from(const Json& j);
AxisBox box_from(const Json& j);
ConvexPoly poly_from(const Json& j);
Region region_from(const Json& j);
fractal::Square square_from(const Json& j);
perron::Triangle triangle_from(const Json& j);
mg::DyadicCube cube_from(const Json& j);
/// Rebuilds derived data (pieces, coefficients) under `caps`.
mg::SpecPtr spec_from(const Json& j, const Caps& caps = Caps::from_env());
mg::CapitalTrace trace_from(const Json& j);

}  // namespace kakeya::io

#endif  // KAKEYA_JSON_IO_HPP
