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

#include <map>
#include <mutex>
#include <string>

#include "kakeya/errors.hpp"
#include "kakeya/perron.hpp"

namespace kakeya::perron {
namespace {

Region thicken_all(const std::vector<Triangle>& ts, const Rational& eps) {
  Region r;
  for (const auto& t : ts) r.add(thicken_horizontal(t.poly(), eps));
  return r;
}

void finish(KakeyaStage& st) {
  st.eps = Rational{Integer{1}, Integer{st.triangles.size()}} * pow2(-(st.j + 1));
  for (const auto& tree : st.trees) {
    st.thickened.push_back(thicken_all(tree, st.eps));
    st.G.append(st.thickened.back());
  }
  st.S = union_of(st.triangles);
}

std::shared_ptr<const KakeyaStage> build(int j, const Caps& caps) {
  auto st = std::make_shared<KakeyaStage>();
  st->j = j;
  if (j == 0) {
    st->pieces = {kakeya_seed()};
    st->trees = {{kakeya_seed()}};
    st->triangles = {kakeya_seed()};
    st->p = 1;
    finish(*st);
    return st;
  }
  auto prev = kakeya_stage(j - 1, caps);
  const int cuts = 1 << (j + 1);
  const int level = 1 << j;
  for (const auto& t : prev->triangles) {
    for (auto& piece : cut_triangle(t, cuts)) st->pieces.push_back(std::move(piece));
  }
  st->p = Integer{st->pieces.size()};
  for (const auto& piece : st->pieces) {
    st->trees.push_back(shift_construction(piece, level, IndexRange::kAll, Pairing::kDescending, caps));
    st->triangles.insert(st->triangles.end(), st->trees.back().begin(), st->trees.back().end());
  }
  finish(*st);
  return st;
}

std::shared_ptr<const KakeyaStage> checked(int j, std::size_t i, const Caps& caps) {
  auto st = kakeya_stage(j, caps);
  if (i >= st->trees.size()) {
    throw DomainError("tree index " + std::to_string(i) + " out of range for stage " + std::to_string(j));
  }
  return st;
}

}  // namespace

Triangle kakeya_seed() {
  return Triangle::make({0, 0}, {1, 0}, {Rational{1, 2}, Rational{1, 2}});
}

std::shared_ptr<const KakeyaStage> kakeya_stage(int j, const Caps& caps) {
  if (j < 0) throw DomainError("kakeya_stage: negative j");
  if (j > caps.kakeya_j) {
    throw CapExceeded("kakeya_stage: j = " + std::to_string(j) + " exceeds cap " + std::to_string(caps.kakeya_j) +
                      " (stage sizes grow double-exponentially)");
  }
  // Construction is deterministic, so one cache serves every caller.
  static std::recursive_mutex mu;
  static std::map<int, std::shared_ptr<const KakeyaStage>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(j); it != cache.end()) return it->second;
  auto st = build(j, caps);
  cache.emplace(j, st);
  return st;
}

bool nesting_check(int j, const Caps& caps) {
  auto outer = kakeya_stage(j, caps);
  auto inner = kakeya_stage(j + 1, caps);
  return region_subset(inner->G, outer->G);
}

bool nesting_piece_check(int j, std::size_t i, const Caps& caps) {
  auto outer = kakeya_stage(j, caps);
  auto inner = checked(j + 1, i, caps);
  Region piece_zone{{thicken_horizontal(inner->pieces[i].poly(), outer->eps)}};
  return region_subset(inner->thickened[i], piece_zone);
}

AreaCheck area_bound_check(int j, std::size_t i, const Caps& caps) {
  auto st = checked(j, i, caps);
  return {region_area(st->thickened[i]), Rational{Rational{1} / Rational{st->p}} * pow2(-j)};
}

AreaCheck tree_area_check(int j, std::size_t i, const Caps& caps) {
  auto st = checked(j, i, caps);
  return {region_area(union_of(st->trees[i])), Rational{st->pieces[i].area() / (2 * (1 << j) + 4)}};
}

std::optional<Segment> direction_segment(const Rational& slope, int j, const Caps& caps) {
  auto st = kakeya_stage(j, caps);
  for (const auto& t : st->triangles) {
    const Rational h = t.height();
    // Directions (slope, 1) through the apex that exit through the base.
    const Rational foot = t.w.x - slope * h;
    if (foot < t.u.x || t.v.x < foot) continue;
    Segment seg{{foot, t.u.y}, t.w};
    const Rational len2 = Rational{h * h * (1 + slope * slope)};
    if (len2 < Rational{1, 9}) continue;
    if (!segment_in_region(seg.p, seg.q, st->G)) {
      throw std::logic_error("direction_segment: certificate rejected by segment_in_region");
    }
    return seg;
  }
  return std::nullopt;
}

}  // namespace kakeya::perron
