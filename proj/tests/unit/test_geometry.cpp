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

#include <gtest/gtest.h>

#include <random>

#include "kakeya/errors.hpp"
#include "kakeya/geometry.hpp"
#include "oracles.hpp"

namespace kakeya {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Rational, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "1", "-3", "5/6", "-64439/87360", "123456789012345678901234567890/11"}) {
    EXPECT_EQ(to_text(parse_rational(s)), s);
  }
  EXPECT_EQ(to_text(parse_rational("4/8")), "1/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, PowersAndFloor) {
  EXPECT_EQ(pow2(-3), q(1, 8));
  EXPECT_EQ(pow2(10), q(1024));
  EXPECT_EQ(pow4(2), q(16));
  EXPECT_EQ(floor(q(-7, 2)), Integer(-4));
  EXPECT_EQ(floor(q(7, 2)), Integer(3));
  EXPECT_EQ(make_rational(6, -4), q(-3, 2));
}

TEST(ConvexPoly, HullCanonicalizesOrderAndCollinearPoints) {
  const auto a = ConvexPoly::hull({{1, 1}, {0, 0}, {1, 0}, {q(1, 2), 0}, {0, 1}, {q(1, 2), q(1, 2)}});
  const auto b = ConvexPoly::from_box(AxisBox::unit());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(poly_area(a), 1);
}

TEST(ConvexPoly, AreaMatchesShoelace) {
  std::mt19937 rng(11);
  for (int n = 0; n < 50; ++n) {
    std::vector<Point2> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({q(rng() % 97, 16), q(rng() % 89, 16)});
    const auto p = ConvexPoly::hull(pts);
    if (p.empty()) continue;
    const std::vector<Point2> v(p.vertices().begin(), p.vertices().end());
    EXPECT_EQ(poly_area(p), oracle::shoelace(v));
  }
}

TEST(Clip, HalfPlaneClipOfSquareByDiagonal) {
  const auto sq = ConvexPoly::from_box(AxisBox::unit());
  const auto lower = clip_convex(sq, HalfPlane::below_line(1, 0));
  EXPECT_EQ(poly_area(lower), q(1, 2));
  EXPECT_EQ(lower.size(), 3u);
  EXPECT_TRUE(clip_convex(sq, HalfPlane::x_at_most(-1)).empty());
}

TEST(RegionArea, UnionOfBoxesMatchesCoordinateCompression) {
  std::mt19937 rng(3);
  for (int n = 0; n < 40; ++n) {
    std::vector<AxisBox> boxes;
    Region r;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      int a = rng() % 33, b = rng() % 33, c = rng() % 33, d = rng() % 33;
      if (a == b || c == d) continue;
      const auto box = AxisBox::make(q(std::min(a, b), 32), q(std::max(a, b), 32), q(std::min(c, d), 32),
                                     q(std::max(c, d), 32));
      boxes.push_back(box);
      r.add(ConvexPoly::from_box(box));
    }
    EXPECT_EQ(region_area(r), oracle::box_union_area(boxes));
  }
}

TEST(RegionArea, InclusionExclusionForTriangles) {
  std::mt19937 rng(5);
  for (int n = 0; n < 30; ++n) {
    std::vector<ConvexPoly> ts;
    for (int i = 0; i < 3; ++i) {
      auto t = ConvexPoly::hull({{q(rng() % 17, 8), q(rng() % 17, 8)},
                                 {q(rng() % 17, 8), q(rng() % 17, 8)},
                                 {q(rng() % 17, 8), q(rng() % 17, 8)}});
      if (t.size() == 3) ts.push_back(t);
    }
    if (ts.size() != 3) continue;
    const auto& [a, b, c] = std::tie(ts[0], ts[1], ts[2]);
    const Rational expected = poly_area(a) + poly_area(b) + poly_area(c) - poly_area(intersect(a, b)) -
                              poly_area(intersect(a, c)) - poly_area(intersect(b, c)) +
                              poly_area(intersect(intersect(a, b), c));
    EXPECT_EQ(region_area(Region{ts}), expected);
  }
}

TEST(RegionArea, DisjointPiecesPartitionTheUnion) {
  const Region r{{ConvexPoly::triangle({0, 0}, {2, 0}, {1, 2}), ConvexPoly::from_box(AxisBox::make(q(1, 2), 3, 0, 1)),
                  ConvexPoly::triangle({0, 1}, {3, 1}, {1, 3})}};
  const auto pieces = disjoint_pieces(r);
  Rational sum = 0;
  for (const auto& p : pieces) sum += poly_area(p);
  EXPECT_EQ(sum, region_area(r));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t k = i + 1; k < pieces.size(); ++k) EXPECT_EQ(poly_area(intersect(pieces[i], pieces[k])), 0);
  }
  const AxisBox box = AxisBox::make(1, 2, q(1, 2), q(3, 2));
  EXPECT_EQ(disjoint_area_in_box(pieces, box), region_area(clip_to_box(r, box)));
}

TEST(Thicken, HorizontalSlideAddsTwoEpsTimesHeight) {
  // Minkowski sum with a horizontal segment of length 2 eps adds 2 eps times
  // the vertical extent for any convex polygon.
  const auto t = ConvexPoly::triangle({0, 0}, {1, 0}, {q(3, 4), 1});
  for (const Rational& eps : {q(1, 8), q(3, 4), q(5)}) {
    EXPECT_EQ(poly_area(thicken_horizontal(t, eps)), poly_area(t) + 2 * eps);
  }
}

TEST(Subset, MeasureLevelSubsetIgnoresBoundaries) {
  const Region big{{ConvexPoly::from_box(AxisBox::unit())}};
  const Region halves{{ConvexPoly::from_box(AxisBox::make(0, q(1, 2), 0, 1)),
                       ConvexPoly::from_box(AxisBox::make(q(1, 2), 1, 0, 1))}};
  EXPECT_TRUE(region_subset(big, halves));
  EXPECT_TRUE(region_subset(halves, big));
  const Region off{{ConvexPoly::from_box(AxisBox::make(q(1, 2), q(3, 2), 0, 1))}};
  EXPECT_FALSE(region_subset(off, big));
}

TEST(Segments, SegmentAcrossTwoAbuttingPieces) {
  const Region r{{ConvexPoly::from_box(AxisBox::make(0, 1, 0, 1)), ConvexPoly::from_box(AxisBox::make(1, 2, 0, 1))}};
  EXPECT_TRUE(segment_in_region({0, 0}, {2, 1}, r));
  EXPECT_FALSE(segment_in_region({0, 0}, {2, q(3, 2)}, r));
}

TEST(AxisBox, RejectsInvertedBounds) { EXPECT_THROW(AxisBox::make(1, 0, 0, 1), DomainError); }

}  // namespace
}  // namespace kakeya
