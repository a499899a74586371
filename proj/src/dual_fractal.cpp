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

#include "kakeya/dual_fractal.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "kakeya/errors.hpp"

namespace kakeya::fractal {
namespace {

void check_digit(int d) {
  if (d < 0 || d > 3) throw DomainError("fractal digit out of range: " + std::to_string(d));
}

std::string describe(const Shift& t) {
  std::ostringstream os;
  os << "(" << t.t1 << "," << t.t2 << ")";
  return os.str();
}

/// Line set of all stage-k squares inside `window`.
Region stage_line_set(int k, const AxisBox& window, const Caps& caps) {
  Region out;
  for (const auto& sq : stage(k, caps)) out.append(line_set_rect(sq.box(), window));
  return out;
}

Point2 rot90(const Point2& p) { return {Rational{-p.y}, p.x}; }
Point2 ref_y(const Point2& p) { return {Rational{-p.x}, p.y}; }

}  // namespace

FractalWord::FractalWord(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) check_digit(d);
}

FractalWord FractalWord::parse(std::string_view text) {
  std::vector<int> digits;
  for (char c : text) {
    if (c < '0' || c > '3') throw DomainError("fractal word must use digits 0-3: '" + std::string(text) + "'");
    digits.push_back(c - '0');
  }
  return FractalWord(std::move(digits));
}

Point2 contraction(int digit, const Point2& p) {
  check_digit(digit);
  return {Rational{(p.x + digit) / 4}, Rational{(p.y + kIntercept[digit]) / 4}};
}

Square fractal_square(const FractalWord& w) {
  // S_{w1} ∘ ... ∘ S_{wn} maps [0,1]^2 onto the square with corner
  // (Σ i_j 4^-j, Σ a_{i_j} 4^-j) and side 4^-n.
  Point2 corner{0, 0};
  Rational scale = 1;
  for (int d : w.digits()) {
    scale /= 4;
    corner.x += d * scale;
    corner.y += kIntercept[d] * scale;
  }
  return {corner, scale};
}

std::vector<Square> stage(int k, const Caps& caps) {
  if (k < 0) throw DomainError("stage: negative k");
  if (k > caps.stage_k) {
    throw CapExceeded("stage: k = " + std::to_string(k) + " exceeds cap " + std::to_string(caps.stage_k));
  }
  std::vector<Square> cur{{{0, 0}, 1}};
  for (int level = 1; level <= k; ++level) {
    std::vector<Square> next;
    next.reserve(cur.size() * 4);
    for (const auto& s : cur) {
      Rational side = s.side / 4;
      for (int d = 0; d < 4; ++d) {
        next.push_back({{Rational{s.corner.x + d * side}, Rational{s.corner.y + kIntercept[d] * side}}, side});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Point2 slope_to_point(const std::vector<int>& slope_digits, int k) {
  if (k < 0 || slope_digits.size() < static_cast<std::size_t>(k)) {
    throw DomainError("slope_to_point: need at least k digits");
  }
  std::vector<int> prefix(slope_digits.begin(), slope_digits.begin() + k);
  return fractal_square(FractalWord(std::move(prefix))).corner;
}

Region line_set_rect(const AxisBox& params, const AxisBox& window) {
  const Rational& mlo = params.xlo;
  const Rational& mhi = params.xhi;
  const Rational& blo = params.ylo;
  const Rational& bhi = params.yhi;
  Region out;
  if (sgn(window.xhi) > 0) {
    // x >= 0: the lowest line has the smallest slope and intercept.
    AxisBox side = window;
    if (sgn(side.xlo) < 0) side.xlo = 0;
    ConvexPoly p = ConvexPoly::from_box(side);
    p = clip_convex(p, HalfPlane::above_line(mlo, blo));
    p = clip_convex(p, HalfPlane::below_line(mhi, bhi));
    out.add(std::move(p));
  }
  if (sgn(window.xlo) < 0) {
    AxisBox side = window;
    if (sgn(side.xhi) > 0) side.xhi = 0;
    ConvexPoly p = ConvexPoly::from_box(side);
    p = clip_convex(p, HalfPlane::above_line(mhi, blo));
    p = clip_convex(p, HalfPlane::below_line(mlo, bhi));
    out.add(std::move(p));
  }
  return out;
}

bool outside_band(const Shift& t) {
  const auto a1 = t.t1 < 0 ? -t.t1 : t.t1;
  const auto a2 = t.t2 < 0 ? -t.t2 : t.t2;
  return a2 > a1 + 2;
}

Region H_region(const Shift& t, int k, const Caps& caps) {
  if (k < 0) throw DomainError("H_region: negative k");
  if (k > caps.line_set_k) {
    throw CapExceeded("H_region: k = " + std::to_string(k) + " exceeds cap " + std::to_string(caps.line_set_k));
  }
  const Point2 shift{Rational{t.t1}, Rational{t.t2}};
  // [0,1]^2 - t in line-set coordinates; integer windows never straddle x = 0.
  const AxisBox window = AxisBox::unit().translated({Rational{-t.t1}, Rational{-t.t2}});
  Caps unlimited = caps;
  unlimited.stage_k = std::max(caps.stage_k, k);
  return stage_line_set(k, window, unlimited).translated(shift);
}

Rational h(const Shift& t, int k, const Caps& caps) {
  if (k > caps.line_set_k) {
    throw CapExceeded("h: k = " + std::to_string(k) + " exceeds cap " + std::to_string(caps.line_set_k));
  }
  static std::mutex mu;
  static std::map<std::pair<Shift, int>, Rational> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({t, k}); it != memo.end()) return it->second;
  }
  Rational area = outside_band(t) ? Rational{0} : region_area(H_region(t, k, caps));
  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(t, k), std::move(area)).first->second;
}

int k_index(const Shift& t, int j, int cap, const Caps& caps) {
  if (j < 0) throw DomainError("k_index: negative j");
  const Rational threshold = pow2(-j);
  for (int k = 0; k <= cap; ++k) {
    if (h(t, k, caps) <= threshold) return k;
  }
  throw CapExceeded("k_index: h(t=" + describe(t) + ", k) > 2^-" + std::to_string(j) + " for every k <= " +
                    std::to_string(cap) + " (t=" + describe(t) + ", j=" + std::to_string(j) + ")");
}

Region besicovitch_assembly(int k, const AxisBox& window, const Caps& caps) {
  if (k > caps.line_set_k) {
    throw CapExceeded("besicovitch_assembly: k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(caps.line_set_k));
  }
  // Each copy g(L) ∩ W is computed as g(L ∩ g^-1(W)).
  auto inv_rot = [](const AxisBox& w) { return AxisBox{w.ylo, w.yhi, Rational{-w.xhi}, Rational{-w.xlo}}; };
  auto inv_ref = [](const AxisBox& w) { return AxisBox{Rational{-w.xhi}, Rational{-w.xlo}, w.ylo, w.yhi}; };
  Region out = stage_line_set(k, window, caps);
  out.append(stage_line_set(k, inv_rot(window), caps).mapped(rot90));
  out.append(stage_line_set(k, inv_ref(window), caps).mapped(ref_y));
  out.append(stage_line_set(k, inv_rot(inv_ref(window)), caps).mapped([](const Point2& p) {
    return ref_y(rot90(p));
  }));
  return out;
}

}  // namespace kakeya::fractal
