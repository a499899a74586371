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

#ifndef KAKEYA_MARTINGALE_HPP
#define KAKEYA_MARTINGALE_HPP

/// @file martingale.hpp
/// @brief Martingales on dyadic cubes of [0,1)^n.
///
/// A martingale here is a nonnegative function d on dyadic cubes with
/// d(Q) = 2^-n * sum of d over the 2^n children of Q. Every spec below is an
/// immutable value; expensive pieces (disjoint decompositions, selected
/// coefficients) are computed once when the spec is built, so evaluation is
/// a pure lookup plus clipping and may run concurrently.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kakeya/caps.hpp"
#include "kakeya/dual_fractal.hpp"
#include "kakeya/geometry.hpp"

namespace kakeya::mg {

/// Q_r(u): the half-open cube prod [u_i 2^-r, (u_i + 1) 2^-r).
struct DyadicCube {
  int r = 0;
  std::vector<std::int64_t> u;

  /// Checks 0 <= u_i < 2^r, n >= 1 and r <= kMaxLevel; throws DomainError.
  static DyadicCube make(int r, std::vector<std::int64_t> u);
  static constexpr int kMaxLevel = 60;

  int n() const { return static_cast<int>(u.size()); }
  /// The cube as a box; n must be 2.
  AxisBox box() const;
  /// The 2^n cubes Q_{r+1}(2u + a), a in {0,1}^n, first coordinate slowest.
  std::vector<DyadicCube> children() const;
  /// Coordinates [from, from + count) as a lower-dimensional cube.
  DyadicCube project(int from, int count) const;

  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
  friend auto operator<=>(const DyadicCube&, const DyadicCube&) = default;
};

/// Every cube at level r in dimension n, in lexicographic index order.
std::vector<DyadicCube> cubes_at(int n, int r);

/// Q_r(u) containing x; u_i = floor(x_i 2^r). Throws DomainError unless
/// every x_i is in [0,1).
DyadicCube locate(const std::vector<Rational>& x, int r);

/// Symmetries of the unit square, acting on [0,1)^2 about its center.
enum class Dihedral { kIdentity, kRot90, kRot180, kRot270, kRefY, kRefX, kDiag, kAntiDiag };

std::string_view to_string(Dihedral g);
Dihedral parse_dihedral(std::string_view name);
/// All eight elements.
std::vector<Dihedral> dihedral_group();

/// Image of a point of the unit square (rot90 is counterclockwise,
/// ref_y is x -> 1 - x).
Point2 apply(Dihedral g, const Point2& p);
/// Image of a cube at its own level.
DyadicCube apply(Dihedral g, const DyadicCube& q);
Dihedral inverse(Dihedral g);

// Specs -----------------------------------------------------------------------

struct Spec;
using SpecPtr = std::shared_ptr<const Spec>;

/// d_G(Q) = 2^{nr} m(G ∩ Q) / totalMass.
struct OpenSet {
  Region G;
  Rational total_mass;
  std::vector<ConvexPoly> pieces;  ///< disjoint decomposition of G
  std::vector<AxisBox> piece_boxes;
  std::vector<Rational> piece_areas;
  std::optional<AxisBox> bounds;  ///< empty G has none
  Rational area;                  ///< m(G)

  /// m(G ∩ box).
  Rational area_in(const AxisBox& box) const;
};

/// d_Y(Q_r(u)) = 2^r if u_1 = 0, else 0.
struct YAxis {};

/// d(Q) = value on every cube of dimension n.
struct Constant {
  int n = 1;
  Rational value;
};

/// Which of the two clauses chose G_{t,j} and c_{t,j}.
struct Coefficient {
  Region G;
  Rational c;
  int clause = 1;  ///< 1: G = H_{t,k}; 2: G = [0,1)^2
  int k = -1;      ///< k(t, |t1|+|t2|+j) under clause 1
};

struct BesicovitchTerm {
  fractal::Shift t;
  int j = 0;
  Coefficient coeff;
  SpecPtr d_G;
};

/// d_Y + sum over |t1|, |t2| <= T, j <= jMax of c_{t,j} d_{G_{t,j}}.
struct BesicovitchTrunc {
  int T = 0;
  int j_max = 0;
  int k_cap = 0;
  std::vector<BesicovitchTerm> terms;
};

/// sum over j <= jMax of 2^-j / p_j * sum_i d_{G_j^i}.
struct KakeyaTrunc {
  int j_max = 0;
  std::vector<std::pair<Rational, SpecPtr>> terms;
};

struct WeightedSum {
  std::vector<std::pair<Rational, SpecPtr>> terms;
};

/// d(Q_r(u)) = first(Q_r(u_1..u_a)) + second(Q_r(u_{a+1}..u_n)).
struct ProductLift {
  SpecPtr first;
  SpecPtr second;
};

/// d(Q) = base(g^-1 Q).
struct SymmetryXform {
  SpecPtr base;
  Dihedral g = Dihedral::kIdentity;
};

struct Spec {
  std::variant<OpenSet, YAxis, Constant, BesicovitchTrunc, KakeyaTrunc, WeightedSum, ProductLift, SymmetryXform>
      node;
  int dim = 2;
};

/// totalMass defaults to m(G). Throws DomainError when it is not positive.
SpecPtr open_set(Region G);
SpecPtr open_set(Region G, Rational total_mass);
SpecPtr y_axis();
SpecPtr constant(int n, Rational value);
/// Coefficients are selected eagerly; CapExceeded names the first (t, j)
/// whose k index cannot be found within k_cap.
SpecPtr besicovitch_trunc(int T, int j_max, int k_cap, const Caps& caps = Caps::from_env());
/// Throws CapExceeded when jMax > caps.kakeya_j.
SpecPtr kakeya_trunc(int j_max, const Caps& caps = Caps::from_env());
/// Coefficients must be >= 0 and dimensions must agree.
SpecPtr weighted_sum(std::vector<std::pair<Rational, SpecPtr>> terms);
SpecPtr product_lift(SpecPtr first, SpecPtr second);
/// base must be two-dimensional.
SpecPtr symmetry_xform(SpecPtr base, Dihedral g);

/// Short tag used in JSON and on the command line.
std::string_view kind_name(const Spec& m);

// Evaluation ------------------------------------------------------------------

/// Throws DomainError on a dimension mismatch.
Rational mg_value(const Spec& m, const DyadicCube& q);

/// d(Q) - 2^-n sum over children.
Rational fairness_residual(const Spec& m, const DyadicCube& q);

struct CapitalTrace {
  std::vector<Rational> point;
  std::vector<std::pair<int, Rational>> entries;  ///< (r, d(Q_r(x))) for r = 0..rMax

  /// First r with capital >= threshold.
  std::optional<int> first_crossing(const Rational& threshold) const;
};

CapitalTrace trace(const Spec& m, const std::vector<Rational>& x, int r_max);

// The computable martingale of the line-set construction ---------------------

/// Clause (i)/(ii) choice of G_{t,j}, c_{t,j}. k indices are searched up to
/// caps.line_set_k; CapExceeded carries (t, j).
Coefficient coefficient_select(const fractal::Shift& t, int j, const Caps& caps = Caps::from_env());

/// A truncated value together with the a-priori bound on what was cut off.
struct Approximation {
  Rational value;
  Rational error_bound;
};

/// d-hat(s, r, u) with p = s + 2r + 6 and error bound 33 * 2^-(s+6).
Approximation besicovitch_hat(int s, int r, const std::vector<std::int64_t>& u, const Caps& caps = Caps::from_env());

/// Closed forms of the geometric sums tau(I) = sum 2^-(|t1|+|t2|+j).
namespace tail {
/// tau(I_1) = tau(I_2): |t_a| > p.
Rational tau_I1(int p);
/// tau(I+): j > p.
Rational tau_Iplus(int p);
/// tau(I_0): the box |t1|, |t2|, j <= p.
Rational tau_I0(int p);
/// Sum over all indices, the root bound minus d_Y's unit.
Rational tau_all();
}  // namespace tail

/// d-hat(s, r, u) = sum_{j <= 2r+s} 2^-j / p_j sum_i d_{G_j^i}(Q_r(u)), with
/// error bound 2^-s. CapExceeded when 2r + s > caps.kakeya_j.
Approximation kakeya_mg_hat(int s, int r, const std::vector<std::int64_t>& u, const Caps& caps = Caps::from_env());

}  // namespace kakeya::mg

#endif  // KAKEYA_MARTINGALE_HPP
