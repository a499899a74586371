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

#include "kakeya/martingale.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "kakeya/errors.hpp"
#include "kakeya/perron.hpp"

namespace kakeya::mg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string shift_text(const fractal::Shift& t) {
  return "(" + std::to_string(t.t1) + "," + std::to_string(t.t2) + ")";
}

Region unit_square_region() { return Region{{ConvexPoly::from_box(AxisBox::unit())}}; }

SpecPtr wrap(decltype(Spec::node) node, int dim) {
  auto s = std::make_shared<Spec>();
  s->node = std::move(node);
  s->dim = dim;
  return s;
}

void check_dim(const Spec& m, const DyadicCube& q) {
  if (m.dim != q.n()) {
    throw DomainError(std::string(kind_name(m)) + ": martingale of dimension " + std::to_string(m.dim) +
                      " evaluated on a cube of dimension " + std::to_string(q.n()));
  }
}

}  // namespace

// Cubes ------------------------------------------------------------------------

DyadicCube DyadicCube::make(int r, std::vector<std::int64_t> u) {
  if (u.empty()) throw DomainError("DyadicCube: dimension must be at least 1");
  if (r < 0 || r > kMaxLevel) throw DomainError("DyadicCube: level out of range: " + std::to_string(r));
  const std::int64_t side = std::int64_t{1} << r;
  for (auto ui : u) {
    if (ui < 0 || ui >= side) {
      throw DomainError("DyadicCube: index " + std::to_string(ui) + " outside 0.." + std::to_string(side - 1));
    }
  }
  return DyadicCube{r, std::move(u)};
}

AxisBox DyadicCube::box() const {
  if (n() != 2) throw DomainError("DyadicCube::box: cube is not two-dimensional");
  const Rational side = pow2(-r);
  return AxisBox{Rational{u[0] * side}, Rational{(u[0] + 1) * side}, Rational{u[1] * side},
                 Rational{(u[1] + 1) * side}};
}

std::vector<DyadicCube> DyadicCube::children() const {
  if (r >= kMaxLevel) throw DomainError("DyadicCube::children: level cap reached");
  const std::size_t count = std::size_t{1} << n();
  std::vector<DyadicCube> out;
  out.reserve(count);
  for (std::size_t a = 0; a < count; ++a) {
    DyadicCube c{r + 1, u};
    for (int i = 0; i < n(); ++i) c.u[i] = 2 * u[i] + static_cast<std::int64_t>((a >> (n() - 1 - i)) & 1);
    out.push_back(std::move(c));
  }
  return out;
}

DyadicCube DyadicCube::project(int from, int count) const {
  if (from < 0 || count < 1 || from + count > n()) throw DomainError("DyadicCube::project: bad coordinate range");
  return DyadicCube{r, std::vector<std::int64_t>(u.begin() + from, u.begin() + from + count)};
}

std::vector<DyadicCube> cubes_at(int n, int r) {
  if (n < 1 || r < 0 || n * r > 24) throw DomainError("cubes_at: refusing to enumerate that many cubes");
  const std::int64_t side = std::int64_t{1} << r;
  std::vector<DyadicCube> out;
  std::vector<std::int64_t> u(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(DyadicCube{r, u});
    int i = n - 1;
    while (i >= 0 && ++u[i] == side) u[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

DyadicCube locate(const std::vector<Rational>& x, int r) {
  if (x.empty()) throw DomainError("locate: empty point");
  if (r < 0 || r > DyadicCube::kMaxLevel) throw DomainError("locate: level out of range");
  std::vector<std::int64_t> u;
  u.reserve(x.size());
  for (const auto& xi : x) {
    if (sgn(xi) < 0 || xi >= 1) throw DomainError("locate: coordinate " + to_text(xi) + " outside [0,1)");
    u.push_back(floor(Rational{xi * pow2(r)}).get_si());
  }
  return DyadicCube{r, std::move(u)};
}

// Symmetries -------------------------------------------------------------------

std::string_view to_string(Dihedral g) {
  switch (g) {
    case Dihedral::kIdentity: return "id";
    case Dihedral::kRot90: return "rot90";
    case Dihedral::kRot180: return "rot180";
    case Dihedral::kRot270: return "rot270";
    case Dihedral::kRefY: return "ref_y";
    case Dihedral::kRefX: return "ref_x";
    case Dihedral::kDiag: return "diag";
    case Dihedral::kAntiDiag: return "antidiag";
  }
  return "?";
}

std::vector<Dihedral> dihedral_group() {
  return {Dihedral::kIdentity, Dihedral::kRot90, Dihedral::kRot180, Dihedral::kRot270,
          Dihedral::kRefY,     Dihedral::kRefX,  Dihedral::kDiag,   Dihedral::kAntiDiag};
}

Dihedral parse_dihedral(std::string_view name) {
  for (auto g : dihedral_group()) {
    if (to_string(g) == name) return g;
  }
  throw DomainError("unknown symmetry '" + std::string(name) + "'");
}

Dihedral inverse(Dihedral g) {
  if (g == Dihedral::kRot90) return Dihedral::kRot270;
  if (g == Dihedral::kRot270) return Dihedral::kRot90;
  return g;
}

namespace {

// The square [0, top]^2 mapped onto itself; top = 1 for points and
// 2^r - 1 for cube indices.
template <class T>
std::pair<T, T> act(Dihedral g, const T& x, const T& y, const T& top) {
  switch (g) {
    case Dihedral::kIdentity: return {x, y};
    case Dihedral::kRot90: return {top - y, x};
    case Dihedral::kRot180: return {top - x, top - y};
    case Dihedral::kRot270: return {y, top - x};
    case Dihedral::kRefY: return {top - x, y};
    case Dihedral::kRefX: return {x, top - y};
    case Dihedral::kDiag: return {y, x};
    case Dihedral::kAntiDiag: return {top - y, top - x};
  }
  return {x, y};
}

}  // namespace

Point2 apply(Dihedral g, const Point2& p) {
  auto [x, y] = act<Rational>(g, p.x, p.y, Rational{1});
  return {std::move(x), std::move(y)};
}

DyadicCube apply(Dihedral g, const DyadicCube& q) {
  if (q.n() != 2) throw DomainError("symmetries act on two-dimensional cubes only");
  const std::int64_t top = (std::int64_t{1} << q.r) - 1;
  auto [a, b] = act<std::int64_t>(g, q.u[0], q.u[1], top);
  return DyadicCube{q.r, {a, b}};
}

// Constructors -----------------------------------------------------------------

SpecPtr open_set(Region G) {
  Rational mass = region_area(G);
  return open_set(std::move(G), std::move(mass));
}

SpecPtr open_set(Region G, Rational total_mass) {
  if (sgn(total_mass) <= 0) throw DomainError("open_set: total mass must be positive");
  OpenSet os;
  os.pieces = disjoint_pieces(G);
  for (const auto& piece : os.pieces) {
    os.piece_boxes.push_back(piece.bbox());
    os.piece_areas.push_back(poly_area(piece));
    os.area += os.piece_areas.back();
  }
  if (!G.empty()) os.bounds = bbox(G);
  os.G = std::move(G);
  os.total_mass = std::move(total_mass);
  return wrap(std::move(os), 2);
}

Rational OpenSet::area_in(const AxisBox& box) const {
  if (!bounds || !bounds->intersects(box)) return 0;
  if (box.contains(*bounds)) return area;
  Rational total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!piece_boxes[i].intersects(box)) continue;
    total += box.contains(piece_boxes[i]) ? piece_areas[i] : poly_area(clip_convex(pieces[i], box));
  }
  return total;
}

SpecPtr y_axis() { return wrap(YAxis{}, 2); }

SpecPtr constant(int n, Rational value) {
  if (n < 1) throw DomainError("constant: dimension must be at least 1");
  if (sgn(value) < 0) throw DomainError("constant: value must be nonnegative");
  return wrap(Constant{n, std::move(value)}, n);
}

Coefficient coefficient_select(const fractal::Shift& t, int j, const Caps& caps) {
  if (j < 0) throw DomainError("coefficient_select: negative j");
  const int J = static_cast<int>(std::llabs(t.t1) + std::llabs(t.t2)) + j;
  int k = 0;
  try {
    k = fractal::k_index(t, J, caps.line_set_k, caps);
  } catch (const CapExceeded& e) {
    throw CapExceeded("coefficient_select(t=" + shift_text(t) + ", j=" + std::to_string(j) + "): " + e.what());
  }
  Coefficient out;
  Rational area = fractal::h(t, k, caps);
  if (sgn(area) == 0) {
    out.G = unit_square_region();
    out.c = pow2(-J);
    out.clause = 2;
  } else {
    out.G = fractal::H_region(t, k, caps);
    out.c = std::move(area);
    out.clause = 1;
    out.k = k;
  }
  return out;
}

SpecPtr besicovitch_trunc(int T, int j_max, int k_cap, const Caps& caps) {
  if (T < 0 || j_max < 0 || k_cap < 0) throw DomainError("besicovitch_trunc: negative range");
  Caps limited = caps;
  limited.line_set_k = k_cap;
  BesicovitchTrunc b{T, j_max, k_cap, {}};
  for (int t1 = -T; t1 <= T; ++t1) {
    for (int t2 = -T; t2 <= T; ++t2) {
      for (int j = 0; j <= j_max; ++j) {
        BesicovitchTerm term;
        term.t = {t1, t2};
        term.j = j;
        term.coeff = coefficient_select(term.t, j, limited);
        // H_{t,k} lies in the unit square, so m(G) is also d_G's total mass.
        term.d_G = open_set(term.coeff.G, term.coeff.clause == 1 ? term.coeff.c : Rational{1});
        b.terms.push_back(std::move(term));
      }
    }
  }
  return wrap(std::move(b), 2);
}

SpecPtr kakeya_trunc(int j_max, const Caps& caps) {
  if (j_max < 0) throw DomainError("kakeya_trunc: negative jMax");
  if (j_max > caps.kakeya_j) {
    throw CapExceeded("kakeya_trunc: jMax = " + std::to_string(j_max) + " exceeds cap " +
                      std::to_string(caps.kakeya_j));
  }
  static std::mutex mu;
  static std::map<int, SpecPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(j_max); it != cache.end()) return it->second;
  KakeyaTrunc kt{j_max, {}};
  for (int j = 0; j <= j_max; ++j) {
    auto st = perron::kakeya_stage(j, caps);
    const Rational weight = pow2(-j) / Rational{st->p};
    for (const auto& g : st->thickened) kt.terms.emplace_back(weight, open_set(g));
  }
  auto spec = wrap(std::move(kt), 2);
  cache.emplace(j_max, spec);
  return spec;
}

SpecPtr weighted_sum(std::vector<std::pair<Rational, SpecPtr>> terms) {
  if (terms.empty()) throw DomainError("weighted_sum: no terms");
  const int dim = terms.front().second->dim;
  for (const auto& [c, m] : terms) {
    if (sgn(c) < 0) throw DomainError("weighted_sum: negative coefficient " + to_text(c));
    if (m->dim != dim) throw DomainError("weighted_sum: terms of different dimensions");
  }
  return wrap(WeightedSum{std::move(terms)}, dim);
}

SpecPtr product_lift(SpecPtr first, SpecPtr second) {
  if (!first || !second) throw DomainError("product_lift: missing factor");
  const int dim = first->dim + second->dim;
  return wrap(ProductLift{std::move(first), std::move(second)}, dim);
}

SpecPtr symmetry_xform(SpecPtr base, Dihedral g) {
  if (!base || base->dim != 2) throw DomainError("symmetry_xform: base must be two-dimensional");
  return wrap(SymmetryXform{std::move(base), g}, 2);
}

std::string_view kind_name(const Spec& m) {
  return std::visit(Overloaded{
                        [](const OpenSet&) { return std::string_view{"open-set"}; },
                        [](const YAxis&) { return std::string_view{"y-axis"}; },
                        [](const Constant&) { return std::string_view{"constant"}; },
                        [](const BesicovitchTrunc&) { return std::string_view{"besicovitch"}; },
                        [](const KakeyaTrunc&) { return std::string_view{"kakeya"}; },
                        [](const WeightedSum&) { return std::string_view{"weighted-sum"}; },
                        [](const ProductLift&) { return std::string_view{"product-lift"}; },
                        [](const SymmetryXform&) { return std::string_view{"symmetry"}; },
                    },
                    m.node);
}

// Evaluation -------------------------------------------------------------------

Rational mg_value(const Spec& m, const DyadicCube& q) {
  check_dim(m, q);
  return std::visit(
      Overloaded{
          [&](const OpenSet& os) {
            return Rational{pow4(q.r) * os.area_in(q.box()) / os.total_mass};
          },
          [&](const YAxis&) { return q.u[0] == 0 ? pow2(q.r) : Rational{0}; },
          [&](const Constant& c) { return c.value; },
          [&](const BesicovitchTrunc& b) {
            Rational sum = q.u[0] == 0 ? pow2(q.r) : Rational{0};
            for (const auto& term : b.terms) sum += term.coeff.c * mg_value(*term.d_G, q);
            return sum;
          },
          [&](const KakeyaTrunc& k) {
            Rational sum = 0;
            for (const auto& [w, d] : k.terms) sum += w * mg_value(*d, q);
            return sum;
          },
          [&](const WeightedSum& w) {
            Rational sum = 0;
            for (const auto& [c, d] : w.terms) sum += c * mg_value(*d, q);
            return sum;
          },
          [&](const ProductLift& p) {
            const int a = p.first->dim;
            return Rational{mg_value(*p.first, q.project(0, a)) + mg_value(*p.second, q.project(a, q.n() - a))};
          },
          [&](const SymmetryXform& s) { return mg_value(*s.base, apply(inverse(s.g), q)); },
      },
      m.node);
}

Rational fairness_residual(const Spec& m, const DyadicCube& q) {
  Rational sum = 0;
  for (const auto& c : q.children()) sum += mg_value(m, c);
  return Rational{mg_value(m, q) - sum * pow2(-q.n())};
}

std::optional<int> CapitalTrace::first_crossing(const Rational& threshold) const {
  for (const auto& [r, v] : entries) {
    if (v >= threshold) return r;
  }
  return std::nullopt;
}

CapitalTrace trace(const Spec& m, const std::vector<Rational>& x, int r_max) {
  if (r_max < 0) throw DomainError("trace: negative rMax");
  CapitalTrace out{x, {}};
  for (int r = 0; r <= r_max; ++r) out.entries.emplace_back(r, mg_value(m, locate(x, r)));
  return out;
}

// Truncations --------------------------------------------------------------------

namespace tail {
namespace {
// sum_{t > p} 2^-t
Rational beyond(int p) { return pow2(-p); }
// sum_{|t| <= p} 2^-|t|
Rational two_sided(int p) { return Rational{3 - pow2(1 - p)}; }
// sum_{0 <= j <= p} 2^-j
Rational head(int p) { return Rational{2 - pow2(-p)}; }
constexpr int kTwoSidedTotal = 3;  // sum over Z of 2^-|t|
constexpr int kHeadTotal = 2;      // sum over N of 2^-j
}  // namespace

Rational tau_I1(int p) { return Rational{2 * beyond(p) * kTwoSidedTotal * kHeadTotal}; }
Rational tau_Iplus(int p) { return Rational{kTwoSidedTotal * kTwoSidedTotal * beyond(p)}; }
Rational tau_I0(int p) { return Rational{two_sided(p) * two_sided(p) * head(p)}; }
Rational tau_all() { return Rational{kTwoSidedTotal * kTwoSidedTotal * kHeadTotal}; }
}  // namespace tail

Approximation besicovitch_hat(int s, int r, const std::vector<std::int64_t>& u, const Caps& caps) {
  if (s < 0) throw DomainError("besicovitch_hat: negative s");
  const DyadicCube q = DyadicCube::make(r, u);
  if (q.n() != 2) throw DomainError("besicovitch_hat: cube must be two-dimensional");
  const int p = s + 2 * r + 6;
  auto spec = besicovitch_trunc(p, p, caps.line_set_k, caps);
  return {mg_value(*spec, q), Rational{33 * pow2(-(s + 6))}};
}

Approximation kakeya_mg_hat(int s, int r, const std::vector<std::int64_t>& u, const Caps& caps) {
  if (s < 0) throw DomainError("kakeya_mg_hat: negative s");
  const DyadicCube q = DyadicCube::make(r, u);
  if (q.n() != 2) throw DomainError("kakeya_mg_hat: cube must be two-dimensional");
  auto spec = kakeya_trunc(2 * r + s, caps);
  return {mg_value(*spec, q), pow2(-s)};
}

}  // namespace kakeya::mg
