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

// Vertical-decomposition sweep for unions of convex polygons.

#include <algorithm>
#include <numeric>

#include "kakeya/geometry.hpp"

namespace kakeya {
namespace {

/// Non-vertical edge on the line y = a*x + b over x in [x0, x1].
struct ChainEdge {
  Rational x0, x1, a, b;
  Rational ylo, yhi;
  std::size_t poly;
};

struct Chains {
  Rational xmin, xmax;
  std::vector<std::size_t> lower;  // indices into the edge pool, by x
  std::vector<std::size_t> upper;
};

struct Interval {
  Rational lo, hi;
  const ChainEdge* lo_edge;
  const ChainEdge* hi_edge;
};

class Sweep {
 public:
  explicit Sweep(const Region& r) {
    auto parts = r.parts();
    chains_.resize(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto v = parts[k].vertices();
      Chains& c = chains_[k];
      c.xmin = v[0].x;
      c.xmax = v[0].x;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % v.size()];
        xs_.push_back(p.x);
        if (p.x < c.xmin) c.xmin = p.x;
        if (c.xmax < p.x) c.xmax = p.x;
        const int dir = cmp(q.x, p.x);
        if (dir == 0) continue;
        const Point2& l = dir > 0 ? p : q;
        const Point2& h = dir > 0 ? q : p;
        Rational a = (h.y - l.y) / (h.x - l.x);
        Rational b = l.y - a * l.x;
        edges_.push_back({l.x, h.x, a, b, min(l.y, h.y), max(l.y, h.y), k});
        // Counterclockwise: rightward edges bound from below.
        (dir > 0 ? c.lower : c.upper).push_back(edges_.size() - 1);
      }
    }
    for (auto& c : chains_) {
      auto by_x = [this](std::size_t i, std::size_t j) { return edges_[i].x0 < edges_[j].x0; };
      std::sort(c.lower.begin(), c.lower.end(), by_x);
      std::sort(c.upper.begin(), c.upper.end(), by_x);
    }
    add_crossings();
    std::sort(xs_.begin(), xs_.end());
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  }

  /// Calls f(x0, x1, merged) for every slab with nonempty coverage.
  template <typename F>
  void run(F&& f) {
    std::vector<std::size_t> order(chains_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [this](std::size_t i, std::size_t j) { return chains_[i].xmin < chains_[j].xmin; });
    std::vector<std::size_t> active;
    std::size_t next = 0;
    std::vector<Interval> iv;
    std::vector<Interval> merged;
    for (std::size_t s = 0; s + 1 < xs_.size(); ++s) {
      const Rational& x0 = xs_[s];
      const Rational& x1 = xs_[s + 1];
      while (next < order.size() && chains_[order[next]].xmin <= x0) active.push_back(order[next++]);
      std::erase_if(active, [&](std::size_t k) { return chains_[k].xmax <= x0; });
      if (active.empty()) continue;

      Rational xm = (x0 + x1) / 2;
      iv.clear();
      for (std::size_t k : active) {
        const ChainEdge& lo = locate(chains_[k].lower, xm);
        const ChainEdge& hi = locate(chains_[k].upper, xm);
        iv.push_back({Rational{lo.a * xm + lo.b}, Rational{hi.a * xm + hi.b}, &lo, &hi});
      }
      std::sort(iv.begin(), iv.end(), [](const Interval& p, const Interval& q) { return p.lo < q.lo; });
      merged.clear();
      for (auto& cur : iv) {
        if (!merged.empty() && cur.lo <= merged.back().hi) {
          if (merged.back().hi < cur.hi) {
            merged.back().hi = cur.hi;
            merged.back().hi_edge = cur.hi_edge;
          }
        } else {
          merged.push_back(cur);
        }
      }
      f(x0, x1, xm, std::span<const Interval>(merged));
    }
  }

 private:
  const ChainEdge& locate(const std::vector<std::size_t>& chain, const Rational& x) const {
    // First edge whose right end lies beyond x; chains are contiguous in x.
    auto it = std::partition_point(chain.begin(), chain.end(),
                                   [&](std::size_t i) { return edges_[i].x1 <= x; });
    return edges_[*it];
  }

  void add_crossings() {
    std::vector<std::size_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [this](std::size_t i, std::size_t j) { return edges_[i].x0 < edges_[j].x0; });
    Rational x;
    for (std::size_t ii = 0; ii < idx.size(); ++ii) {
      const ChainEdge& e = edges_[idx[ii]];
      for (std::size_t jj = ii + 1; jj < idx.size(); ++jj) {
        const ChainEdge& f = edges_[idx[jj]];
        if (e.x1 <= f.x0) break;
        if (e.poly == f.poly) continue;
        if (e.yhi < f.ylo || f.yhi < e.ylo) continue;
        if (e.a == f.a) continue;
        x = (f.b - e.b) / (e.a - f.a);
        if (e.x0 < x && x < e.x1 && f.x0 < x && x < f.x1) xs_.push_back(x);
      }
    }
  }

  std::vector<ChainEdge> edges_;
  std::vector<Chains> chains_;
  std::vector<Rational> xs_;
};

}  // namespace

Rational region_area(const Region& r) {
  if (r.empty()) return 0;
  if (r.size() == 1) return poly_area(r.parts()[0]);
  Rational total = 0;
  Rational len;
  Sweep sweep(r);
  sweep.run([&](const Rational& x0, const Rational& x1, const Rational&, std::span<const Interval> merged) {
    len = 0;
    for (const auto& m : merged) len += m.hi - m.lo;
    total += (x1 - x0) * len;
  });
  return total;
}

std::vector<ConvexPoly> disjoint_pieces(const Region& r) {
  std::vector<ConvexPoly> out;
  if (r.empty()) return out;
  Sweep sweep(r);
  sweep.run([&](const Rational& x0, const Rational& x1, const Rational&, std::span<const Interval> merged) {
    for (const auto& m : merged) {
      const ChainEdge& lo = *m.lo_edge;
      const ChainEdge& hi = *m.hi_edge;
      ConvexPoly piece = ConvexPoly::hull({{x0, Rational{lo.a * x0 + lo.b}},
                                           {x1, Rational{lo.a * x1 + lo.b}},
                                           {x1, Rational{hi.a * x1 + hi.b}},
                                           {x0, Rational{hi.a * x0 + hi.b}}});
      if (!piece.empty()) out.push_back(std::move(piece));
    }
  });
  return out;
}

}  // namespace kakeya
