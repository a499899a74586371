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

#include "kakeya/svg.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "kakeya/errors.hpp"

namespace kakeya::svg {
namespace {

struct Style {
  std::string_view name;
  std::string_view attrs;
};

constexpr std::array<Style, 4> kStyles = {{
    {"ink", R"(fill="#000000" stroke="none")"},
    {"shade", R"(fill="#9e9e9e" fill-opacity="0.6" stroke="none")"},
    {"outline", R"(fill="none" stroke="#c62828" stroke-width="0.4%" vector-effect="non-scaling-stroke")"},
    {"window", R"(fill="none" stroke="#1565c0" stroke-dasharray="4 2" vector-effect="non-scaling-stroke")"},
}};

const Style& style_for(const std::string& name) {
  for (const auto& s : kStyles) {
    if (s.name == name) return s;
  }
  throw DomainError("svg: unknown style '" + name + "'");
}

bool poly_less(const ConvexPoly& a, const ConvexPoly& b) {
  return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                                      b.vertices().end(),
                                      [](const Point2& p, const Point2& q) { return lex_less(p, q); });
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string fixed_decimal(const Rational& q, int digits) {
  if (digits < 0) throw DomainError("fixed_decimal: negative digit count");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(q) < 0;
  const Rational mag = negative ? Rational{-q} : q;
  // round half away from zero: floor(|q| * 10^d + 1/2)
  const Integer n = floor(Rational{mag * scale + Rational{1, 2}});
  std::string body = n.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  const bool zero = n == 0;
  return (negative && !zero ? "-" : "") + body;
}

std::string emit_svg(const std::vector<Layer>& layers, std::string_view title) {
  std::optional<AxisBox> box;
  for (const auto& layer : layers) {
    style_for(layer.style);
    if (layer.region.empty()) continue;
    const AxisBox b = bbox(layer.region);
    box = box ? AxisBox{min(box->xlo, b.xlo), max(box->xhi, b.xhi), min(box->ylo, b.ylo), max(box->yhi, b.yhi)} : b;
  }
  if (!box) box = AxisBox::unit();
  Rational w = box->xhi - box->xlo;
  Rational h = box->yhi - box->ylo;
  if (sgn(w) == 0) w = 1;
  if (sgn(h) == 0) h = 1;
  const Rational mx = w / 20;
  const Rational my = h / 20;

  std::ostringstream os;
  os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
  os << "<!-- kakeya-lab style " << kStyleVersion
     << "; coordinates are exact rationals rounded to 12 decimals for display only; y is negated -->\n";
  // y is flipped by negating coordinates so that no transform is needed.
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" viewBox=")" << fixed_decimal(Rational{box->xlo - mx}) << ' '
     << fixed_decimal(Rational{-box->yhi - my}) << ' ' << fixed_decimal(Rational{w + 2 * mx}) << ' '
     << fixed_decimal(Rational{h + 2 * my}) << R"(">)" << '\n';
  os << "<title>" << escape(title) << "</title>\n";
  for (const auto& layer : layers) {
    const Style& st = style_for(layer.style);
    std::vector<ConvexPoly> parts(layer.region.parts().begin(), layer.region.parts().end());
    std::sort(parts.begin(), parts.end(), poly_less);
    os << R"(<g class=")" << st.name << R"(" )" << st.attrs << ">\n";
    for (const auto& p : parts) {
      os << R"(<polygon points=")";
      bool first = true;
      for (const auto& v : p.vertices()) {
        if (!first) os << ' ';
        first = false;
        os << fixed_decimal(v.x) << ',' << fixed_decimal(Rational{-v.y});
      }
      os << R"("/>)" << '\n';
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kakeya::svg
