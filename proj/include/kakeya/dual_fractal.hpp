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

#ifndef KAKEYA_DUAL_FRACTAL_HPP
#define KAKEYA_DUAL_FRACTAL_HPP

/// @file dual_fractal.hpp
/// @brief The four-map fractal dust in (slope, intercept) space and its line
/// sets.
///
/// A point (m, b) is dual to the line y = m*x + b. The dust is the attractor
/// of the contractions x -> (x + (i, a_i)) / 4 with (a_0..a_3) = (2, 0, 3, 1);
/// its stage-k approximation is a union of 4^k squares of side 4^-k. The line
/// set of a stage is the union of all lines dual to its points.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/caps.hpp"
#include "kakeya/geometry.hpp"

namespace kakeya::fractal {

/// Intercept offsets a_i for digit i.
inline constexpr std::array<int, 4> kIntercept = {2, 0, 3, 1};

/// Word over {0, 1, 2, 3}. Construction rejects other digits.
class FractalWord {
 public:
  FractalWord() = default;
  explicit FractalWord(std::vector<int> digits);
  /// From "0123"-style text.
  static FractalWord parse(std::string_view text);

  const std::vector<int>& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }

 private:
  std::vector<int> digits_;
};

/// Axis-aligned square with lower-left corner and side length.
struct Square {
  Point2 corner;
  Rational side;

  AxisBox box() const { return AxisBox{corner.x, corner.x + side, corner.y, corner.y + side}; }
  bool contains(const Point2& p) const { return box().contains(p); }
  bool contains(const Square& s) const { return box().contains(s.box()); }
  friend bool operator==(const Square&, const Square&) = default;
};

/// Integer translation vector t = (t1, t2).
struct Shift {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

/// Apply contraction S_i. Throws DomainError for i outside {0..3}.
Point2 contraction(int digit, const Point2& p);

/// F(w) = S_{w1} ∘ ... ∘ S_{wn}([0,1]^2).
Square fractal_square(const FractalWord& w);

/// All 4^k stage squares, in lexicographic word order.
/// Throws CapExceeded when k > caps.stage_k.
std::vector<Square> stage(int k, const Caps& caps = Caps::from_env());

/// Corner (m_k, b_k) of F(i_1..i_k) for the first k base-4 digits of a slope.
/// Throws DomainError when fewer than k digits are given.
Point2 slope_to_point(const std::vector<int>& slope_digits, int k);

/// Line set of a parameter rectangle [mlo, mhi] x [blo, bhi], clipped to
/// `window`. Windows straddling x = 0 are split there because the line set is
/// only convex on each side of the y-axis. At most two parts.
Region line_set_rect(const AxisBox& params, const AxisBox& window);

/// H_{t,k} = [0,1]^2 ∩ (L(F_k) + t), measure-level.
/// Throws CapExceeded when k > caps.line_set_k.
Region H_region(const Shift& t, int k, const Caps& caps = Caps::from_env());

/// h(t, k) = m(H_{t,k}). Results are memoized (thread-safe, value-stable).
Rational h(const Shift& t, int k, const Caps& caps = Caps::from_env());

/// Whether |t2| > |t1| + 2, where h(t, k) = 0 for every k.
bool outside_band(const Shift& t);

/// Least k <= cap with h(t, k) <= 2^-j. Throws CapExceeded naming (t, j)
/// when no such k exists within the cap.
int k_index(const Shift& t, int j, int cap, const Caps& caps = Caps::from_env());

/// Stage-k approximation of the Besicovitch assembly
/// L ∪ Rot90(L) ∪ RefY(L ∪ Rot90(L)), L = L(F_k), restricted to `window`.
Region besicovitch_assembly(int k, const AxisBox& window, const Caps& caps = Caps::from_env());

}  // namespace kakeya::fractal

#endif  // KAKEYA_DUAL_FRACTAL_HPP
