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

#include "kakeya/geometry.hpp"

#include <algorithm>

#include "kakeya/errors.hpp"

namespace kakeya {

bool lex_less(const Point2& p, const Point2& q) {
  int c = cmp(p.x, q.x);
  return c < 0 || (c == 0 && p.y < q.y);
}

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return Rational{(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)};
}

// AxisBox --------------------------------------------------------------------

AxisBox AxisBox::make(Rational xlo, Rational xhi, Rational ylo, Rational yhi) {
  if (xhi < xlo || yhi < ylo) throw DomainError("AxisBox: lo > hi");
  return AxisBox{std::move(xlo), std::move(xhi), std::move(ylo), std::move(yhi)};
}

bool AxisBox::contains(const Point2& p) const {
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

bool AxisBox::intersects(const AxisBox& o) const {
  return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
}

bool AxisBox::contains(const AxisBox& o) const {
  return xlo <= o.xlo && o.xhi <= xhi && ylo <= o.ylo && o.yhi <= yhi;
}

AxisBox AxisBox::translated(const Point2& t) const {
  return AxisBox{xlo + t.x, xhi + t.x, ylo + t.y, yhi + t.y};
}

// HalfPlane ------------------------------------------------------------------

HalfPlane HalfPlane::left_of(const Point2& p, const Point2& q) {
  // orient(p, q, x) >= 0  <=>  (q-p) x (x-p) >= 0.
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  // dx*(y - p.y) - dy*(x - p.x) >= 0  <=>  dy*x - dx*y <= dy*p.x - dx*p.y
  return HalfPlane{dy, Rational{-dx}, Rational{dy * p.x - dx * p.y}};
}

HalfPlane HalfPlane::above_line(const Rational& slope, const Rational& intercept) {
  // slope*x - y <= -intercept
  return HalfPlane{slope, -1, Rational{-intercept}};
}

HalfPlane HalfPlane::below_line(const Rational& slope, const Rational& intercept) {
  return HalfPlane{Rational{-slope}, 1, intercept};
}

// ConvexPoly -----------------------------------------------------------------

ConvexPoly ConvexPoly::hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  ConvexPoly out;
  if (pts.size() < 3) return out;

  // Andrew's monotone chain; popping on orient <= 0 drops collinear points.
  std::vector<Point2> h;
  h.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (h.size() >= 2 && sgn(orient(h[h.size() - 2], h.back(), p)) <= 0) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const auto& p = pts[i];
    while (h.size() >= lower && sgn(orient(h[h.size() - 2], h.back(), p)) <= 0) h.pop_back();
    h.push_back(p);
  }
  h.pop_back();
  if (h.size() < 3) return out;
  out.vertices_ = std::move(h);
  return out;
}

ConvexPoly ConvexPoly::from_box(const AxisBox& b) {
  return hull({{b.xlo, b.ylo}, {b.xhi, b.ylo}, {b.xhi, b.yhi}, {b.xlo, b.yhi}});
}

ConvexPoly ConvexPoly::triangle(const Point2& a, const Point2& b, const Point2& c) {
  return hull({a, b, c});
}

AxisBox ConvexPoly::bbox() const {
  AxisBox b{vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y};
  for (const auto& v : vertices_) {
    if (v.x < b.xlo) b.xlo = v.x;
    if (b.xhi < v.x) b.xhi = v.x;
    if (v.y < b.ylo) b.ylo = v.y;
    if (b.yhi < v.y) b.yhi = v.y;
  }
  return b;
}

bool ConvexPoly::contains(const Point2& p) const {
  if (empty()) return false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(orient(vertices_[i], vertices_[(i + 1) % n], p)) < 0) return false;
  }
  return true;
}

bool ConvexPoly::contains(const ConvexPoly& other) const {
  if (other.empty()) return true;
  return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                     [&](const Point2& v) { return contains(v); });
}

ConvexPoly ConvexPoly::translated(const Point2& t) const {
  ConvexPoly out;
  out.vertices_.reserve(vertices_.size());
  for (const auto& v : vertices_) out.vertices_.push_back(v + t);
  return out;
}

ConvexPoly ConvexPoly::mapped(const std::function<Point2(const Point2&)>& f) const {
  std::vector<Point2> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(f(v));
  return hull(std::move(pts));
}

// Region ---------------------------------------------------------------------

Region::Region(std::vector<ConvexPoly> parts) {
  parts_.reserve(parts.size());
  for (auto& p : parts) add(std::move(p));
}

void Region::add(ConvexPoly part) {
  if (!part.empty()) parts_.push_back(std::move(part));
}

void Region::append(const Region& other) {
  parts_.insert(parts_.end(), other.parts_.begin(), other.parts_.end());
}

Region Region::translated(const Point2& t) const {
  Region out;
  out.parts_.reserve(parts_.size());
  for (const auto& p : parts_) out.parts_.push_back(p.translated(t));
  return out;
}

Region Region::mapped(const std::function<Point2(const Point2&)>& f) const {
  Region out;
  for (const auto& p : parts_) out.add(p.mapped(f));
  return out;
}

AxisBox bbox(const Region& r) {
  auto parts = r.parts();
  AxisBox b = parts.front().bbox();
  for (const auto& p : parts.subspan(1)) {
    AxisBox q = p.bbox();
    if (q.xlo < b.xlo) b.xlo = q.xlo;
    if (b.xhi < q.xhi) b.xhi = q.xhi;
    if (q.ylo < b.ylo) b.ylo = q.ylo;
    if (b.yhi < q.yhi) b.yhi = q.yhi;
  }
  return b;
}

// Areas and clipping -----------------------------------------------------------

Rational poly_area(const ConvexPoly& p) {
  auto v = p.vertices();
  if (v.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return Rational{twice / 2};
}

ConvexPoly clip_convex(const ConvexPoly& p, const HalfPlane& h) {
  auto v = p.vertices();
  if (v.empty()) return {};
  const std::size_t n = v.size();
  std::vector<Rational> ex(n);
  bool all_in = true;
  bool all_out = true;
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = h.excess(v[i]);
    const int s = sgn(ex[i]);
    all_in = all_in && s <= 0;
    all_out = all_out && s >= 0;
  }
  if (all_in) return p;
  if (all_out) return {};

  // Sutherland-Hodgman against a single plane.
  std::vector<Point2> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const int si = sgn(ex[i]);
    const int sj = sgn(ex[j]);
    if (si <= 0) out.push_back(v[i]);
    if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
      Rational t = ex[i] / (ex[i] - ex[j]);
      out.push_back({Rational{v[i].x + t * (v[j].x - v[i].x)}, Rational{v[i].y + t * (v[j].y - v[i].y)}});
    }
  }
  return ConvexPoly::hull(std::move(out));
}

ConvexPoly clip_convex(const ConvexPoly& p, const AxisBox& box) {
  if (p.empty()) return {};
  AxisBox b = p.bbox();
  if (!box.intersects(b)) return {};
  if (box.contains(b)) return p;
  ConvexPoly q = p;
  if (b.xlo < box.xlo) q = clip_convex(q, HalfPlane::x_at_least(box.xlo));
  if (box.xhi < b.xhi) q = clip_convex(q, HalfPlane::x_at_most(box.xhi));
  if (b.ylo < box.ylo) q = clip_convex(q, HalfPlane::y_at_least(box.ylo));
  if (box.yhi < b.yhi) q = clip_convex(q, HalfPlane::y_at_most(box.yhi));
  return q;
}

ConvexPoly intersect(const ConvexPoly& p, const ConvexPoly& q) {
  if (p.empty() || q.empty()) return {};
  if (!p.bbox().intersects(q.bbox())) return {};
  auto v = q.vertices();
  ConvexPoly out = p;
  for (std::size_t i = 0; i < v.size() && !out.empty(); ++i) {
    out = clip_convex(out, HalfPlane::left_of(v[i], v[(i + 1) % v.size()]));
  }
  return out;
}

Region clip_to_box(const Region& r, const AxisBox& box) {
  Region out;
  for (const auto& p : r.parts()) out.add(clip_convex(p, box));
  return out;
}

Rational disjoint_area_in_box(std::span<const ConvexPoly> pieces, const AxisBox& box) {
  Rational total = 0;
  for (const auto& p : pieces) {
    if (p.bbox().intersects(box)) total += poly_area(clip_convex(p, box));
  }
  return total;
}

ConvexPoly thicken_horizontal(const ConvexPoly& p, const Rational& eps) {
  if (sgn(eps) < 0) throw DomainError("thicken_horizontal: negative eps");
  if (sgn(eps) == 0 || p.empty()) return p;
  std::vector<Point2> pts;
  pts.reserve(2 * p.size());
  for (const auto& v : p.vertices()) {
    pts.push_back({Rational{v.x - eps}, v.y});
    pts.push_back({Rational{v.x + eps}, v.y});
  }
  return ConvexPoly::hull(std::move(pts));
}

bool region_subset(const Region& a, const Region& b) {
  for (const auto& part : a.parts()) {
    const AxisBox pb = part.bbox();
    std::vector<const ConvexPoly*> near;
    bool covered = false;
    for (const auto& q : b.parts()) {
      if (!q.bbox().intersects(pb)) continue;
      if (q.contains(part)) {
        covered = true;
        break;
      }
      near.push_back(&q);
    }
    if (covered) continue;
    Region local;
    for (const auto* q : near) local.add(intersect(*q, part));
    if (region_area(local) != poly_area(part)) return false;
  }
  return true;
}

bool segment_in_region(const Point2& p, const Point2& q, const Region& r) {
  if (p == q) throw DomainError("segment_in_region: degenerate segment");
  const Point2 d = q - p;
  // Parameter intervals [lo, hi] ⊆ [0, 1] of the segment inside each part.
  std::vector<std::pair<Rational, Rational>> spans;
  for (const auto& part : r.parts()) {
    auto v = part.vertices();
    Rational lo = 0;
    Rational hi = 1;
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      const Point2& a = v[i];
      const Point2& b = v[(i + 1) % v.size()];
      // orient(a, b, p + t d) = alpha + beta t >= 0
      Rational alpha = orient(a, b, p);
      Rational beta = Rational{(b.x - a.x) * d.y - (b.y - a.y) * d.x};
      const int sb = sgn(beta);
      if (sb == 0) {
        ok = sgn(alpha) >= 0;
      } else {
        Rational t = Rational{-alpha / beta};
        if (sb > 0) {
          if (lo < t) lo = t;
        } else {
          if (t < hi) hi = t;
        }
        ok = lo <= hi;
      }
    }
    if (ok) spans.emplace_back(std::move(lo), std::move(hi));
  }
  std::sort(spans.begin(), spans.end());
  Rational reach = 0;
  for (const auto& [lo, hi] : spans) {
    if (reach < lo) return false;
    if (reach < hi) reach = hi;
    if (reach == 1) return true;
  }
  return reach == 1;
}

}  // namespace kakeya
