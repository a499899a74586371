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

#include "kakeya/json_io.hpp"

#include <span>
#include <variant>

#include "kakeya/errors.hpp"

namespace kakeya::io {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

template <class T, class F>
Json list(std::span<const T> xs, F f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Encoders -----------------------------------------------------------------------

Json to_json(const Rational& q) { return to_text(q); }

Json to_json(const Point2& p) { return Json{{"x", to_text(p.x)}, {"y", to_text(p.y)}}; }

Json to_json(const AxisBox& b) {
  return Json{{"x", Json::array({to_text(b.xlo), to_text(b.xhi)})},
              {"y", Json::array({to_text(b.ylo), to_text(b.yhi)})}};
}

Json to_json(const ConvexPoly& p) {
  return Json{{"vertices", list<Point2>(p.vertices(), [](const Point2& v) { return to_json(v); })}};
}

Json to_json(const Region& r) {
  return Json{{"parts", list<ConvexPoly>(r.parts(), [](const ConvexPoly& p) { return to_json(p); })}};
}

Json to_json(const fractal::Square& s) { return Json{{"corner", to_json(s.corner)}, {"side", to_text(s.side)}}; }

Json to_json(const perron::Triangle& t) {
  return Json{{"u", to_json(t.u)}, {"v", to_json(t.v)}, {"w", to_json(t.w)}};
}

Json to_json(const perron::LabeledTriangle& t) {
  return Json{{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}};
}

Json to_json(const perron::SproutResult& s) {
  Json stages = Json::array();
  for (const auto& st : s.stages) {
    stages.push_back(Json{{"level", st.level},
                          {"triangles", list<perron::LabeledTriangle>(st.triangles, [](const auto& t) { return to_json(t); })}});
  }
  return Json{{"apex_xs", list<Rational>(s.apex_xs, [](const Rational& x) { return to_json(x); })},
              {"area", to_text(region_area(s.tree))},
              {"stages", std::move(stages)}};
}

Json to_json(const perron::KakeyaStage& st) {
  return Json{{"j", st.j},
              {"p", st.p.get_str()},
              {"count", st.count()},
              {"eps", to_text(st.eps)},
              {"area_S", to_text(region_area(st.S))},
              {"area_G", to_text(region_area(st.G))},
              {"triangles", list<perron::Triangle>(st.triangles, [](const auto& t) { return to_json(t); })}};
}

Json to_json(const mg::DyadicCube& q) { return Json{{"r", q.r}, {"u", q.u}}; }

Json to_json(const mg::Spec& m) {
  Json out = std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, mg::OpenSet>) {
          return Json{{"region", to_json(node.G)}, {"total_mass", to_text(node.total_mass)}};
        } else if constexpr (std::is_same_v<T, mg::YAxis>) {
          return Json::object();
        } else if constexpr (std::is_same_v<T, mg::Constant>) {
          return Json{{"n", node.n}, {"value", to_text(node.value)}};
        } else if constexpr (std::is_same_v<T, mg::BesicovitchTrunc>) {
          return Json{{"T", node.T}, {"j_max", node.j_max}, {"k_cap", node.k_cap}};
        } else if constexpr (std::is_same_v<T, mg::KakeyaTrunc>) {
          return Json{{"j_max", node.j_max}};
        } else if constexpr (std::is_same_v<T, mg::WeightedSum>) {
          Json terms = Json::array();
          for (const auto& [c, d] : node.terms) terms.push_back(Json{{"coeff", to_text(c)}, {"spec", to_json(*d)}});
          return Json{{"terms", std::move(terms)}};
        } else if constexpr (std::is_same_v<T, mg::ProductLift>) {
          return Json{{"first", to_json(*node.first)}, {"second", to_json(*node.second)}};
        } else {
          return Json{{"base", to_json(*node.base)}, {"g", std::string(mg::to_string(node.g))}};
        }
      },
      m.node);
  out["kind"] = std::string(mg::kind_name(m));
  return out;
}

Json to_json(const mg::CapitalTrace& t) {
  Json entries = Json::array();
  for (const auto& [r, v] : t.entries) entries.push_back(Json{{"r", r}, {"value", to_text(v)}});
  return Json{{"entries", std::move(entries)},
              {"point", list<Rational>(t.point, [](const Rational& x) { return to_json(x); })}};
}

// Decoders -----------------------------------------------------------------------

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("rational: expected a string such as \"1/3\"");
  return parse_rational(j.get<std::string>());
}

Point2 point_from(const Json& j) { return {rational_from(field(j, "x")), rational_from(field(j, "y"))}; }

AxisBox box_from(const Json& j) {
  const Json& x = array(field(j, "x"), "box.x");
  const Json& y = array(field(j, "y"), "box.y");
  if (x.size() != 2 || y.size() != 2) throw ParseError("box: intervals need two endpoints");
  try {
    return AxisBox::make(rational_from(x[0]), rational_from(x[1]), rational_from(y[0]), rational_from(y[1]));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

ConvexPoly poly_from(const Json& j) {
  std::vector<Point2> pts;
  for (const auto& v : array(field(j, "vertices"), "vertices")) pts.push_back(point_from(v));
  return ConvexPoly::hull(std::move(pts));
}

Region region_from(const Json& j) {
  Region r;
  for (const auto& p : array(field(j, "parts"), "parts")) r.add(poly_from(p));
  return r;
}

fractal::Square square_from(const Json& j) { return {point_from(field(j, "corner")), rational_from(field(j, "side"))}; }

perron::Triangle triangle_from(const Json& j) {
  try {
    return perron::Triangle::make(point_from(field(j, "u")), point_from(field(j, "v")), point_from(field(j, "w")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

mg::DyadicCube cube_from(const Json& j) {
  std::vector<std::int64_t> u;
  for (const auto& x : array(field(j, "u"), "u")) u.push_back(integer(x, "u"));
  try {
    return mg::DyadicCube::make(static_cast<int>(integer(field(j, "r"), "r")), std::move(u));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

mg::SpecPtr spec_from(const Json& j, const Caps& caps) {
  if (!field(j, "kind").is_string()) throw ParseError("kind: expected a string");
  const std::string kind = field(j, "kind").get<std::string>();
  auto small = [](const Json& x, const char* what) { return static_cast<int>(integer(x, what)); };
  if (kind == "open-set") return mg::open_set(region_from(field(j, "region")), rational_from(field(j, "total_mass")));
  if (kind == "y-axis") return mg::y_axis();
  if (kind == "constant") return mg::constant(small(field(j, "n"), "n"), rational_from(field(j, "value")));
  if (kind == "besicovitch") {
    return mg::besicovitch_trunc(small(field(j, "T"), "T"), small(field(j, "j_max"), "j_max"),
                                 small(field(j, "k_cap"), "k_cap"), caps);
  }
  if (kind == "kakeya") return mg::kakeya_trunc(small(field(j, "j_max"), "j_max"), caps);
  if (kind == "weighted-sum") {
    std::vector<std::pair<Rational, mg::SpecPtr>> terms;
    for (const auto& t : array(field(j, "terms"), "terms")) {
      terms.emplace_back(rational_from(field(t, "coeff")), spec_from(field(t, "spec"), caps));
    }
    return mg::weighted_sum(std::move(terms));
  }
  if (kind == "product-lift") return mg::product_lift(spec_from(field(j, "first"), caps), spec_from(field(j, "second"), caps));
  if (kind == "symmetry") {
    if (!field(j, "g").is_string()) throw ParseError("g: expected a string");
    return mg::symmetry_xform(spec_from(field(j, "base"), caps), mg::parse_dihedral(field(j, "g").get<std::string>()));
  }
  throw ParseError("unknown martingale kind '" + kind + "'");
}

mg::CapitalTrace trace_from(const Json& j) {
  mg::CapitalTrace t;
  for (const auto& x : array(field(j, "point"), "point")) t.point.push_back(rational_from(x));
  for (const auto& e : array(field(j, "entries"), "entries")) {
    t.entries.emplace_back(static_cast<int>(integer(field(e, "r"), "r")), rational_from(field(e, "value")));
  }
  return t;
}

}  // namespace kakeya::io
