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

// Independent reference computations shared by the unit tests. None of them
// call into the geometry kernel beyond its plain data types.

#ifndef KAKEYA_TESTS_ORACLES_HPP
#define KAKEYA_TESTS_ORACLES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "kakeya/geometry.hpp"

namespace kakeya::oracle {

inline Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational{-q} : q; }

/// Shoelace area of a simple polygon given in either orientation.
inline Rational shoelace(const std::vector<Point2>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return Rational{abs(s) / 2};
}

/// Area of a union of axis boxes by coordinate compression.
inline Rational box_union_area(const std::vector<AxisBox>& boxes) {
  std::vector<Rational> xs, ys;
  for (const auto& b : boxes) {
    xs.push_back(b.xlo), xs.push_back(b.xhi), ys.push_back(b.ylo), ys.push_back(b.yhi);
  }
  auto uniq = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs), uniq(ys);
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
      const Rational mx{(xs[i] + xs[i + 1]) / 2}, my{(ys[k] + ys[k + 1]) / 2};
      if (std::any_of(boxes.begin(), boxes.end(),
                      [&](const AxisBox& b) { return b.xlo < mx && mx < b.xhi && b.ylo < my && my < b.yhi; })) {
        total += (xs[i + 1] - xs[i]) * (ys[k + 1] - ys[k]);
      }
    }
  }
  return total;
}

/// Total length of a union of closed intervals clipped to [lo, hi].
inline Rational merged_length(std::vector<std::pair<Rational, Rational>> iv, const Rational& lo, const Rational& hi) {
  for (auto& [a, b] : iv) a = max(a, lo), b = min(b, hi);
  std::sort(iv.begin(), iv.end());
  Rational total = 0;
  bool open = false;
  Rational s, e;
  for (const auto& [a, b] : iv) {
    if (!(a < b)) continue;
    if (open && a <= e) {
      e = max(e, b);
      continue;
    }
    if (open) total += e - s;
    s = a, e = b, open = true;
  }
  if (open) total += e - s;
  return total;
}

/// A line y = slope * x + icept.
struct Line {
  Rational slope, icept;
  Rational at(const Rational& x) const { return Rational{slope * x + icept}; }
};

/// Exact integral over x in [x0, x1] of the merged length of the intervals
/// [lo_i(x), hi_i(x)] clipped to [y0, y1]. The integrand is linear between
/// consecutive crossings of the endpoint lines, so the midpoint rule on those
/// pieces is exact.
inline Rational sweep_integral(const std::vector<std::pair<Line, Line>>& bands, const Rational& x0,
                               const Rational& x1, const Rational& y0, const Rational& y1) {
  std::vector<Line> lines{{0, y0}, {0, y1}};
  for (const auto& [a, b] : bands) lines.push_back(a), lines.push_back(b);
  std::vector<Rational> xs{x0, x1};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t k = i + 1; k < lines.size(); ++k) {
      if (lines[i].slope == lines[k].slope) continue;
      const Rational x{(lines[k].icept - lines[i].icept) / (lines[i].slope - lines[k].slope)};
      if (x0 < x && x < x1) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational mid{(xs[i] + xs[i + 1]) / 2};
    std::vector<std::pair<Rational, Rational>> iv;
    for (const auto& [a, b] : bands) iv.emplace_back(a.at(mid), b.at(mid));
    total += (xs[i + 1] - xs[i]) * merged_length(iv, y0, y1);
  }
  return total;
}

}  // namespace kakeya::oracle

#endif  // KAKEYA_TESTS_ORACLES_HPP
