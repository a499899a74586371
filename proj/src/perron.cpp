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

#include "kakeya/perron.hpp"

#include <algorithm>
#include <string>

#include "kakeya/errors.hpp"

namespace kakeya::perron {
namespace {

void check_sprout_cap(int k, const Caps& caps, const char* what) {
  if (k < 0) throw DomainError(std::string(what) + ": negative k");
  if (k > caps.sprout_k) {
    throw CapExceeded(std::string(what) + ": k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(caps.sprout_k));
  }
}

Point2 midpoint(const Point2& p, const Point2& q) { return {Rational{(p.x + q.x) / 2}, Rational{(p.y + q.y) / 2}}; }

}  // namespace

Triangle Triangle::make(Point2 u, Point2 v, Point2 w) {
  if (u.y != v.y) throw DomainError("Triangle: base endpoints must share a y-coordinate");
  if (!(u.x < v.x)) throw DomainError("Triangle: need u.x < v.x");
  if (!(u.y < w.y)) throw DomainError("Triangle: apex must lie above the base");
  return Triangle{std::move(u), std::move(v), std::move(w)};
}

std::vector<Triangle> cut_triangle(const Triangle& t, int n) {
  if (n < 1) throw DomainError("cut_triangle: need at least one piece");
  std::vector<Triangle> out;
  out.reserve(static_cast<std::size_t>(n));
  const Rational step = t.base() / n;
  for (int i = 0; i < n; ++i) {
    Point2 left{Rational{t.u.x + i * step}, t.u.y};
    Point2 right{i + 1 == n ? t.v.x : Rational{t.u.x + (i + 1) * step}, t.u.y};
    out.push_back({std::move(left), std::move(right), t.w});
  }
  return out;
}

SproutResult sprout(const Triangle& t, int k, const Caps& caps) {
  check_sprout_cap(k, caps, "sprout");
  const Rational h = t.height();
  // Normalized frame: base centered on the origin along the x-axis, height 2.
  // Scaling about the base midpoint keeps the tree over its own base, with
  // the top apexes centered on the original apex.
  const Point2 origin{Rational{(t.u.x + t.v.x) / 2}, t.u.y};
  const Rational to_hat = Rational{2 / h};
  const Point2 uh = to_hat * (t.u - origin);
  const Point2 vh = to_hat * (t.v - origin);
  const Point2 wh = to_hat * (t.w - origin);

  std::vector<std::vector<LabeledTriangle>> levels;
  levels.push_back({{uh, vh, wh}});
  if (k >= 1) {
    levels.push_back({{midpoint(uh, wh), wh, Rational{Rational{3} / 2} * wh - Rational{Rational{1} / 2} * vh},
                      {midpoint(vh, wh), wh, Rational{Rational{3} / 2} * wh - Rational{Rational{1} / 2} * uh}});
  }
  for (int i = 2; i <= k; ++i) {
    std::vector<LabeledTriangle> next;
    next.reserve(levels.back().size() * 2);
    for (const auto& tri : levels.back()) {
      const Point2 m = midpoint(tri.a, tri.c);
      next.push_back({m, tri.c, Rational{2} * tri.c - tri.b});
      next.push_back({tri.b, tri.c, Rational{2} * tri.c - m});
    }
    levels.push_back(std::move(next));
  }

  const Rational scale = h / (k + 2);
  auto place = [&](const Point2& p) { return scale * p + origin; };
  SproutResult out;
  for (int i = 0; i <= k; ++i) {
    SproutStage st;
    st.level = i;
    for (const auto& tri : levels[static_cast<std::size_t>(i)]) {
      LabeledTriangle placed{place(tri.a), place(tri.b), place(tri.c)};
      out.tree.add(placed.poly());
      st.triangles.push_back(std::move(placed));
    }
    out.stages.push_back(std::move(st));
  }
  for (const auto& tri : out.stages.back().triangles) out.apex_xs.push_back(tri.c.x);
  std::sort(out.apex_xs.begin(), out.apex_xs.end());
  if (std::adjacent_find(out.apex_xs.begin(), out.apex_xs.end()) != out.apex_xs.end()) {
    throw std::logic_error("sprout: repeated apex position");
  }
  return out;
}

std::vector<Triangle> shift_construction(const Triangle& t, int k, IndexRange range, Pairing pairing,
                                         const Caps& caps) {
  check_sprout_cap(k, caps, "shift_construction");
  const SproutResult tree = sprout(t, k, caps);
  const std::size_t n = std::size_t{1} << k;
  if (tree.apex_xs.size() != n) throw std::logic_error("shift_construction: apex count != 2^k");
  const std::vector<Triangle> pieces = cut_triangle(t, static_cast<int>(n));
  const std::size_t used = range == IndexRange::kAll ? n : n - 1;
  std::vector<Triangle> out;
  out.reserve(used);
  for (std::size_t i = 0; i < used; ++i) {
    const Rational& apex = pairing == Pairing::kAscending ? tree.apex_xs[i] : tree.apex_xs[n - 1 - i];
    out.push_back(pieces[i].translated({Rational{apex - t.w.x}, 0}));
  }
  return out;
}

Region union_of(const std::vector<Triangle>& ts) {
  Region r;
  for (const auto& t : ts) r.add(t.poly());
  return r;
}

AreaCheck perron_area_check(const Triangle& t, int k, const Caps& caps) {
  return {region_area(sprout(t, k, caps).tree), Rational{t.area() / (2 * k + 4)}};
}

ConvexPoly enclosing_trapezoid(const Triangle& t) {
  const Point2 two_u = Rational{2} * t.u;
  const Point2 two_v = Rational{2} * t.v;
  return ConvexPoly::hull({two_u - t.v, t.w - t.v + t.u, t.w + t.v - t.u, two_v - t.u});
}

bool containment_check(const Triangle& t, int k, const Caps& caps) {
  return region_subset(sprout(t, k, caps).tree, Region{{enclosing_trapezoid(t)}});
}

}  // namespace kakeya::perron
