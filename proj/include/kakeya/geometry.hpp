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

#ifndef KAKEYA_GEOMETRY_HPP
#define KAKEYA_GEOMETRY_HPP

/// @file geometry.hpp
/// @brief Exact rational plane geometry.
///
/// Everything here works in exact arithmetic; there is no floating point
/// in any predicate or construction. Plane sets are handled "up to
/// Lebesgue-null sets": a Region is a finite union of closed convex
/// polygons, and open/closed boundaries are never distinguished. Every
/// area, subset and martingale computation downstream only needs that.

#include <functional>
#include <span>
#include <vector>

#include "kakeya/rational.hpp"

namespace kakeya {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

/// Lexicographic (x, then y).
bool lex_less(const Point2& p, const Point2& q);

/// z-component of (b - a) x (c - a). Positive for a left turn.
Rational orient(const Point2& a, const Point2& b, const Point2& c);

/// Closed axis-aligned box [xlo, xhi] x [ylo, yhi].
struct AxisBox {
  Rational xlo, xhi, ylo, yhi;

  /// Throws DomainError unless lo <= hi on both axes.
  static AxisBox make(Rational xlo, Rational xhi, Rational ylo, Rational yhi);
  static AxisBox unit() { return make(0, 1, 0, 1); }

  bool contains(const Point2& p) const;
  bool intersects(const AxisBox& other) const;
  bool contains(const AxisBox& other) const;
  Rational area() const { return Rational{(xhi - xlo) * (yhi - ylo)}; }
  AxisBox translated(const Point2& t) const;

  friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

/// Closed half-plane {(x, y) : a*x + b*y <= c}.
struct HalfPlane {
  Rational a, b, c;

  /// Points on or to the left of the directed line p -> q.
  static HalfPlane left_of(const Point2& p, const Point2& q);
  static HalfPlane x_at_most(const Rational& v) { return {1, 0, v}; }
  static HalfPlane x_at_least(const Rational& v) { return {-1, 0, Rational{-v}}; }
  static HalfPlane y_at_most(const Rational& v) { return {0, 1, v}; }
  static HalfPlane y_at_least(const Rational& v) { return {0, -1, Rational{-v}}; }
  /// y >= slope * x + intercept.
  static HalfPlane above_line(const Rational& slope, const Rational& intercept);
  /// y <= slope * x + intercept.
  static HalfPlane below_line(const Rational& slope, const Rational& intercept);

  /// a*x + b*y - c; <= 0 inside.
  Rational excess(const Point2& p) const { return Rational{a * p.x + b * p.y - c}; }
  bool contains(const Point2& p) const { return sgn(excess(p)) <= 0; }
};

/// Closed convex polygon. Canonical form: counterclockwise, no repeated or
/// collinear vertices, first vertex lexicographically smallest. Anything
/// with zero area canonicalizes to the empty polygon.
class ConvexPoly {
 public:
  ConvexPoly() = default;

  /// Convex hull of an arbitrary point set, canonicalized.
  static ConvexPoly hull(std::vector<Point2> points);
  static ConvexPoly from_box(const AxisBox& box);
  static ConvexPoly triangle(const Point2& a, const Point2& b, const Point2& c);

  bool empty() const { return vertices_.empty(); }
  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Tight bounding box. Precondition: !empty().
  AxisBox bbox() const;

  /// Closed containment.
  bool contains(const Point2& p) const;
  bool contains(const ConvexPoly& other) const;

  ConvexPoly translated(const Point2& t) const;
  /// Applies an affine map given point-wise; the image is re-canonicalized.
  ConvexPoly mapped(const std::function<Point2(const Point2&)>& f) const;

  friend bool operator==(const ConvexPoly&, const ConvexPoly&) = default;

 private:
  std::vector<Point2> vertices_;
};

/// Finite union of convex parts, up to measure zero. Parts may overlap.
/// Empty parts are dropped on insertion.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<ConvexPoly> parts);

  void add(ConvexPoly part);
  void append(const Region& other);

  std::span<const ConvexPoly> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  Region translated(const Point2& t) const;
  Region mapped(const std::function<Point2(const Point2&)>& f) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<ConvexPoly> parts_;
};

// Areas and clipping --------------------------------------------------------

/// Shoelace area; 0 for the empty polygon.
Rational poly_area(const ConvexPoly& p);

/// Intersection with a closed half-plane.
ConvexPoly clip_convex(const ConvexPoly& p, const HalfPlane& h);

ConvexPoly clip_convex(const ConvexPoly& p, const AxisBox& box);

/// Intersection of two convex polygons.
ConvexPoly intersect(const ConvexPoly& p, const ConvexPoly& q);

Region clip_to_box(const Region& r, const AxisBox& box);

/// Exact Lebesgue measure of the union of the parts.
///
/// Vertical decomposition: the x-axis is cut at every vertex abscissa and
/// every crossing of edges from different parts. Inside each slab every
/// part is a trapezoid between two fixed lines and no two boundary lines
/// cross, so the covered length is affine in x and the slab contributes
/// width * (covered length at the slab midpoint).
Rational region_area(const Region& r);

/// Pairwise-nonoverlapping convex pieces (trapezoids, possibly degenerate to
/// triangles) whose union equals the union of `r`. Same sweep as
/// region_area; the sum of the piece areas equals region_area(r).
std::vector<ConvexPoly> disjoint_pieces(const Region& r);

/// m(union(r) ∩ box) for a set of pairwise-nonoverlapping pieces, e.g. the
/// output of disjoint_pieces.
Rational disjoint_area_in_box(std::span<const ConvexPoly> pieces, const AxisBox& box);

/// Horizontal thickening: hull of P - (eps, 0) and P + (eps, 0), which is the
/// closure of the union of horizontal translates of P by |delta| < eps.
/// Throws DomainError for eps < 0. eps == 0 returns P.
ConvexPoly thicken_horizontal(const ConvexPoly& p, const Rational& eps);

/// m(A \ B) == 0.
bool region_subset(const Region& a, const Region& b);

/// Whether the closed segment pq lies in the closure of union(r).
/// Throws DomainError if p == q.
bool segment_in_region(const Point2& p, const Point2& q, const Region& r);

/// Bounding box of all parts. Precondition: !r.empty().
AxisBox bbox(const Region& r);

}  // namespace kakeya

#endif  // KAKEYA_GEOMETRY_HPP
