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

#ifndef KAKEYA_PERRON_HPP
#define KAKEYA_PERRON_HPP

/// @file perron.hpp
/// @brief Perron trees and the staged Kakeya construction.
///
/// Trees are built in the frame where the base of the triangle lies on the
/// x-axis, centered on the origin, and then moved back. In that frame the
/// sprouting recursion, the shifted-piece description and the enclosing
/// trapezoid all refer to the same set.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "kakeya/caps.hpp"
#include "kakeya/geometry.hpp"

namespace kakeya::perron {

/// Triangle with horizontal base u-v (u left of v) and apex w above it.
struct Triangle {
  Point2 u, v, w;

  /// Validates u.y == v.y, u.x < v.x, w.y > u.y; throws DomainError.
  static Triangle make(Point2 u, Point2 v, Point2 w);

  Rational height() const { return Rational{w.y - u.y}; }
  Rational base() const { return Rational{v.x - u.x}; }
  Rational area() const { return Rational{base() * height() / 2}; }
  ConvexPoly poly() const { return ConvexPoly::triangle(u, v, w); }
  Triangle translated(const Point2& t) const { return {u + t, v + t, w + t}; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Sprouted triangle with vertices a, b, c at successive heights.
struct LabeledTriangle {
  Point2 a, b, c;
  ConvexPoly poly() const { return ConvexPoly::triangle(a, b, c); }
  friend bool operator==(const LabeledTriangle&, const LabeledTriangle&) = default;
};

struct SproutStage {
  int level = 0;
  std::vector<LabeledTriangle> triangles;
};

struct SproutResult {
  std::vector<SproutStage> stages;  ///< levels 0..k, in the tree's final position
  Region tree;                      ///< union of all stage triangles
  std::vector<Rational> apex_xs;    ///< ascending x of the top-level vertices
};

/// N equal-area triangles sharing the apex, bases split left to right.
/// Throws DomainError for N < 1.
std::vector<Triangle> cut_triangle(const Triangle& t, int n);

/// Schoenberg's sprouting construction of the level-k Perron tree.
/// Throws CapExceeded when k > caps.sprout_k.
SproutResult sprout(const Triangle& t, int k, const Caps& caps = Caps::from_env());

/// Index range used when pairing cut pieces with apex positions.
enum class IndexRange {
  kAll,           ///< 1 <= i <= 2^k
  kDropLast,      ///< 1 <= i < 2^k, as literally printed
};

/// Which apex a cut piece is slid to.
enum class Pairing {
  kAscending,   ///< i-th piece from the left to the i-th smallest apex
  kDescending,  ///< i-th piece from the left to the i-th largest apex
};

/// The tree as slid copies of cut_triangle(t, 2^k): each piece is moved
/// horizontally so its apex lands on an apex of the sprouted tree.
/// Throws CapExceeded when k > caps.sprout_k.
std::vector<Triangle> shift_construction(const Triangle& t, int k, IndexRange range = IndexRange::kAll,
                                         Pairing pairing = Pairing::kDescending,
                                         const Caps& caps = Caps::from_env());

/// Region covered by a list of triangles.
Region union_of(const std::vector<Triangle>& ts);

struct AreaCheck {
  Rational computed;
  Rational predicted;
  bool matches() const { return computed == predicted; }
};

/// computed = m(P_k(t)), predicted = m(t) / (2k + 4).
AreaCheck perron_area_check(const Triangle& t, int k, const Caps& caps = Caps::from_env());

/// Trapezoid with vertices 2u - v, w - v + u, w + v - u, 2v - u.
ConvexPoly enclosing_trapezoid(const Triangle& t);

/// Whether the level-k tree lies inside enclosing_trapezoid(t).
bool containment_check(const Triangle& t, int k, const Caps& caps = Caps::from_env());

// Kakeya stages ----------------------------------------------------------------

struct KakeyaStage {
  int j = 0;
  std::vector<Triangle> pieces;              ///< tau_j^i (the cut triangles); S_0 itself at j = 0
  std::vector<std::vector<Triangle>> trees;  ///< slid pieces making up each P_j^i
  std::vector<Triangle> triangles;           ///< all of S_j, tree by tree
  Integer p;                                 ///< number of trees
  Rational eps;                              ///< 1 / (2^{j+1} |S_j|)
  std::vector<Region> thickened;             ///< G_j^i, one per tree
  Region S;                                  ///< union of triangles
  Region G;                                  ///< union of thickened

  std::size_t count() const { return triangles.size(); }
};

/// The initial triangle (0,0), (1,0), (1/2,1/2).
Triangle kakeya_seed();

/// Stage j, cached after first construction. Throws CapExceeded when
/// j > caps.kakeya_j, before doing any work.
std::shared_ptr<const KakeyaStage> kakeya_stage(int j, const Caps& caps = Caps::from_env());

/// m(G_{j+1}) \ G_j) == 0.
bool nesting_check(int j, const Caps& caps = Caps::from_env());

/// Per-tree link of the nesting argument: the eps_{j+1}-thickened tree
/// j+1, i sits inside the eps_j-thickening of its own cut piece.
bool nesting_piece_check(int j, std::size_t i, const Caps& caps = Caps::from_env());

/// computed = m(G_j^i), bound = 1 / (2^j p_j).
AreaCheck area_bound_check(int j, std::size_t i, const Caps& caps = Caps::from_env());

/// computed = m(P_j^i), predicted = m(tau_j^i) / (2 * 2^j + 4).
AreaCheck tree_area_check(int j, std::size_t i, const Caps& caps = Caps::from_env());

struct Segment {
  Point2 p, q;
};

/// A segment of length >= 1/3 with direction (slope, 1) (dx per unit dy)
/// inside the closure of G_j, or nullopt when no stage-j triangle spans that
/// direction. The returned segment is verified with segment_in_region.
std::optional<Segment> direction_segment(const Rational& slope, int j, const Caps& caps = Caps::from_env());

}  // namespace kakeya::perron

#endif  // KAKEYA_PERRON_HPP
