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

#include "kakeya/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "kakeya/dual_fractal.hpp"
#include "kakeya/errors.hpp"
#include "kakeya/martingale.hpp"
#include "kakeya/perron.hpp"

namespace kakeya::verify {
namespace {

using Clock = std::chrono::steady_clock;

/// Collects checks, timing each one and turning exceptions into failures.
class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  /// `body` fills expected/actual/note and returns the status.
  void check(std::string id, const std::function<Status(CheckResult&)>& body, bool cap_means_skip = false) {
    CheckResult c;
    c.id = std::move(id);
    const auto start = Clock::now();
    try {
      c.status = body(c);
    } catch (const CapExceeded& e) {
      c.status = cap_means_skip ? Status::kSkipped : Status::kFail;
      c.note = std::string("CapExceeded: ") + e.what();
    } catch (const std::exception& e) {
      c.status = Status::kFail;
      c.note = std::string("error: ") + e.what();
    }
    c.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    report_.checks.push_back(std::move(c));
  }

  /// Equality of two exact values.
  void equal(std::string id, const std::function<std::pair<Value, Value>()>& f, std::string note = {}) {
    check(std::move(id), [&](CheckResult& c) {
      std::tie(c.expected, c.actual) = f();
      c.note = note;
      return c.expected == c.actual ? Status::kPass : Status::kFail;
    });
  }

  /// A predicate expected to hold.
  void holds(std::string id, const std::function<bool()>& f, std::string note = {}, bool cap_means_skip = false) {
    check(
        std::move(id),
        [&](CheckResult& c) {
          c.expected = true;
          c.actual = f();
          c.note = note;
          return std::get<bool>(c.actual) ? Status::kPass : Status::kFail;
        },
        cap_means_skip);
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::string tag(int i) { return std::to_string(i); }

bool fair_everywhere(const mg::Spec& m, int n, int r_max) {
  for (int r = 0; r <= r_max; ++r) {
    for (const auto& q : mg::cubes_at(n, r)) {
      if (sgn(mg::fairness_residual(m, q)) != 0) return false;
    }
  }
  return true;
}

perron::Triangle seed_triangle() { return perron::kakeya_seed(); }
perron::Triangle scalene_triangle() { return perron::Triangle::make({0, 0}, {3, 0}, {2, 2}); }

// Suites ------------------------------------------------------------------------

void fairness_suite(Runner& run, const Options& opts) {
  const auto regions = sample_regions(10, 20260516);
  for (std::size_t i = 0; i < regions.size(); ++i) {
    run.holds("c01.open-set." + tag(static_cast<int>(i)),
              [&] { return fair_everywhere(*mg::open_set(regions[i]), 2, 4); }, "all 341 cubes with r <= 4");
  }
  run.holds("c01.y-axis", [] { return fair_everywhere(*mg::y_axis(), 2, 4); });
  for (auto g : mg::dihedral_group()) {
    const std::string name(mg::to_string(g));
    run.holds("c01.symmetry." + name + ".y-axis",
              [&] { return fair_everywhere(*mg::symmetry_xform(mg::y_axis(), g), 2, 4); });
    run.holds("c01.symmetry." + name + ".open-set",
              [&] { return fair_everywhere(*mg::symmetry_xform(mg::open_set(regions[0]), g), 2, 4); });
  }
  run.holds("c01.product-lift.n3", [&] {
    return fair_everywhere(*mg::product_lift(mg::open_set(regions[1]), mg::constant(1, 1)), 3, 3) &&
           fair_everywhere(*mg::product_lift(mg::constant(1, 2), mg::y_axis()), 3, 3);
  }, "all 585 cubes with r <= 3 in n = 3");
  run.holds("c01.besicovitch.box0",
            [&] { return fair_everywhere(*mg::besicovitch_trunc(0, 0, 4, opts.caps), 2, 4); },
            "the only index box |t| <= T, j <= jMax that resolves under k cap 4 is T = 0, jMax = 0");
  run.holds("c01.besicovitch.resolved-terms", [&] {
    Caps caps = opts.caps;
    caps.line_set_k = 4;
    std::vector<std::pair<Rational, mg::SpecPtr>> terms{{1, mg::y_axis()}};
    for (int t1 = -4; t1 <= 4; ++t1) {
      for (int t2 = -4; t2 <= 4; ++t2) {
        for (int j = 0; j <= 4; ++j) {
          try {
            auto co = mg::coefficient_select({t1, t2}, j, caps);
            terms.emplace_back(co.c, mg::open_set(co.G, co.clause == 1 ? co.c : Rational{1}));
          } catch (const CapExceeded&) {
          }
        }
      }
    }
    return fair_everywhere(*mg::weighted_sum(std::move(terms)), 2, 4);
  }, "d_Y plus every c_{t,j} d_{G_{t,j}} with |t| <= 4, j <= 4 whose k index resolves");
  const int kj = std::min(opts.caps.kakeya_j, 2);
  run.holds("c01.kakeya.j" + tag(kj), [&] { return fair_everywhere(*mg::kakeya_trunc(kj, opts.caps), 2, 4); });

  // Capital settles at 1/m(G) once the cube fits in an eps-box.
  for (std::size_t i = 0; i < regions.size(); ++i) {
    run.check("c02.settle." + tag(static_cast<int>(i)), [&](CheckResult& c) {
      const Region& G = regions[i];
      const auto verts = G.parts().front().vertices();
      Point2 x{0, 0};
      for (const auto& v : verts) x = x + v;
      x = Rational{1, static_cast<long>(verts.size())} * x;
      int e = 1;
      for (; e <= 16; ++e) {
        const Rational eps = pow2(-e);
        const AxisBox box = AxisBox::make(Rational{x.x - eps}, Rational{x.x + eps}, Rational{x.y - eps},
                                          Rational{x.y + eps});
        if (region_subset(Region{{ConvexPoly::from_box(box)}}, G)) break;
      }
      if (e > 16) throw std::logic_error("no eps-box certificate found");
      auto d = mg::open_set(G);
      const Rational target = Rational{1} / region_area(G);
      const auto tr = mg::trace(*d, {x.x, x.y}, e + 4);
      c.expected = target;
      c.note = "eps = 2^-" + std::to_string(e) + ", checked r = " + std::to_string(e + 1) + ".." + std::to_string(e + 4);
      for (int r = e + 1; r <= e + 4; ++r) {
        c.actual = tr.entries[static_cast<std::size_t>(r)].second;
        if (tr.entries[static_cast<std::size_t>(r)].second != target) return Status::kFail;
      }
      return Status::kPass;
    });
  }
}

void schoenberg_suite(Runner& run, const Options& opts) {
  const std::vector<std::pair<std::string, perron::Triangle>> tris{{"seed", seed_triangle()},
                                                                   {"scalene", scalene_triangle()}};
  for (const auto& [name, t] : tris) {
    for (int k = 1; k <= opts.k_max; ++k) {
      run.equal("c03.law." + name + ".k" + tag(k), [&] {
        auto a = perron::perron_area_check(t, k, opts.caps);
        return std::pair<Value, Value>{a.predicted, a.computed};
      }, "expected m(tau)/(2k+4)");
    }
    run.check("c03.k0-discrepancy." + name, [&](CheckResult& c) {
      auto a = perron::perron_area_check(t, 0, opts.caps);
      c.expected = a.predicted;
      c.actual = a.computed;
      c.note = "P_0 = tau, so the formula's m(tau)/4 is not attained at k = 0; detected and reported";
      return a.computed == t.area() && a.predicted == Rational{t.area() / 4} ? Status::kPass : Status::kFail;
    });
  }
  for (const auto& [name, t] : tris) {
    for (int k = 0; k <= std::min(3, opts.k_max); ++k) {
      run.check("c04.sprout-shift." + name + ".k" + tag(k), [&](CheckResult& c) {
        const Region tree = perron::sprout(t, k, opts.caps).tree;
        const Region shifted = perron::union_of(
            perron::shift_construction(t, k, perron::IndexRange::kAll, perron::Pairing::kDescending, opts.caps));
        c.expected = region_area(tree);
        c.actual = region_area(shifted);
        c.note = "reading: all 2^k pieces, i-th piece from the left to the i-th largest apex";
        return c.expected == c.actual && region_subset(tree, shifted) && region_subset(shifted, tree)
                   ? Status::kPass
                   : Status::kFail;
      });
    }
  }
  for (const auto& [name, t] : tris) {
    for (int k = 0; k <= 3; ++k) {
      run.holds("c05.containment." + name + ".k" + tag(k), [&] { return perron::containment_check(t, k, opts.caps); });
    }
  }
}

void nesting_suite(Runner& run, const Options& opts) {
  for (int j = 0; j <= opts.j_max; ++j) {
    const bool beyond = j + 1 > opts.caps.kakeya_j;
    run.holds("c06.nesting.j" + tag(j), [&] { return perron::nesting_check(j, opts.caps); }, {}, beyond);
  }
  auto st1 = perron::kakeya_stage(1, opts.caps);
  for (std::size_t i = 0; i < st1->trees.size(); ++i) {
    run.holds("c06.piece.j0.i" + tag(static_cast<int>(i)),
              [&] { return perron::nesting_piece_check(0, i, opts.caps); });
  }
  if (opts.caps.kakeya_j >= 2) {
    auto st2 = perron::kakeya_stage(2, opts.caps);
    for (std::size_t i = 0; i < st2->trees.size(); i += 4) {
      run.holds("c06.piece.j1.i" + tag(static_cast<int>(i)),
                [&] { return perron::nesting_piece_check(1, i, opts.caps); });
    }
  }
  run.check("c06.nesting.j2", [&](CheckResult& c) {
    c.note = "needs stage 3 (over 8 million triangles); beyond desk scale";
    return Status::kSkipped;
  });
}

void kakeya_suite(Runner& run, const Options& opts) {
  const int top = std::min(opts.caps.kakeya_j, 2);
  Integer prev_count = 0;
  for (int j = 0; j <= top; ++j) {
    auto st = perron::kakeya_stage(j, opts.caps);
    run.check("c07.recurrence.j" + tag(j), [&](CheckResult& c) {
      const Integer p = j == 0 ? Integer{1} : Integer{Integer{1} << (j + 1)} * prev_count;
      Integer count = p;
      if (j > 0) count <<= (1 << j);
      const Rational eps = Rational{1} / Rational{count} * pow2(-(j + 1));
      Integer bound = 1;
      bound <<= (1 << (j + 2));
      c.expected = eps;
      c.actual = st->eps;
      c.note = "p = " + st->p.get_str() + ", |S| = " + std::to_string(st->count());
      return st->p == p && Integer{st->count()} == count && st->eps == eps && Integer{st->count()} <= bound
                 ? Status::kPass
                 : Status::kFail;
    });
    prev_count = st->count();
    const std::size_t step = j <= 1 ? 1 : 4;
    for (std::size_t i = 0; i < st->trees.size(); i += step) {
      const std::string at = ".j" + tag(j) + ".i" + tag(static_cast<int>(i));
      run.check("c07.area-bound" + at, [&](CheckResult& c) {
        auto a = perron::area_bound_check(j, i, opts.caps);
        c.expected = a.predicted;
        c.actual = a.computed;
        c.note = "strict: m(G_j^i) < 1/(2^j p_j)";
        return a.computed < a.predicted ? Status::kPass : Status::kFail;
      });
      if (j >= 1) {
        run.equal("c07.tree-area" + at, [&] {
          auto a = perron::tree_area_check(j, i, opts.caps);
          return std::pair<Value, Value>{a.predicted, a.computed};
        }, "expected m(tau_j^i)/(2*2^j + 4)");
      }
    }
  }

  const std::vector<std::vector<int>> slopes{{0, 0, 0, 0, 0}, {3, 3, 3, 3, 3}, {0, 1, 2, 3, 0},
                                             {2, 1, 3, 0, 2}, {1, 3, 1, 3, 2}};
  const auto squares = fractal::stage(5, opts.caps);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    run.holds("c11.slope-point." + tag(static_cast<int>(i)), [&] {
      const Point2 pt = fractal::slope_to_point(slopes[i], 5);
      return std::any_of(squares.begin(), squares.end(), [&](const fractal::Square& s) { return s.contains(pt); });
    });
  }
  for (int j = 0; j <= std::min(1, top); ++j) {
    for (int n = -12; n <= 12; ++n) {
      const Rational slope{n, 12};
      run.holds("c11.segment.j" + tag(j) + ".slope" + to_text(slope),
                [&] { return perron::direction_segment(slope, j, opts.caps).has_value(); });
    }
  }
  run.holds("c13.stage3-capped", [] {
    try {
      perron::kakeya_stage(3, Caps{});
    } catch (const CapExceeded&) {
      return true;
    }
    return false;
  }, "stage 3 must be refused, not attempted");
}

void besicovitch_suite(Runner& run, const Options& opts) {
  for (int idx = 0; idx < 20; ++idx) {
    const int s = idx % 7;
    const int r = idx % 4;
    const std::int64_t side = std::int64_t{1} << r;
    const std::vector<std::int64_t> u{(5 * idx) % side, (3 * idx) % side};
    const std::string at = ".s" + tag(s) + ".r" + tag(r) + ".u" + std::to_string(u[0]) + "_" + std::to_string(u[1]);
    const int p = s + 2 * r + 6;
    run.check("c08.refine-bound" + at, [&](CheckResult& c) {
      const Rational gap = Rational{pow4(r) * (mg::tail::tau_I0(p + 4) - mg::tail::tau_I0(p))};
      c.expected = pow2(-s);
      c.actual = gap;
      c.note = "4^r (tau(I_0(p+4)) - tau(I_0(p))) bounds the refinement";
      return gap < pow2(-s) ? Status::kPass : Status::kFail;
    });
    run.check("c08.refine" + at, [&](CheckResult& c) {
      const auto a = mg::besicovitch_hat(s, r, u, opts.caps);
      const auto b = mg::besicovitch_hat(s + 4, r, u, opts.caps);
      c.expected = pow2(-s);
      c.actual = Rational{b.value - a.value};
      return sgn(b.value - a.value) >= 0 && b.value - a.value < pow2(-s) ? Status::kPass : Status::kFail;
    });
  }
  for (int p = 6; p <= 24; p += 6) {
    run.check("c08.tail.p" + tag(p), [&](CheckResult& c) {
      c.expected = Rational{12 * pow2(-p)};
      c.actual = mg::tail::tau_I1(p);
      const bool cover =
          Rational{mg::tail::tau_all() - mg::tail::tau_I0(p)} <= Rational{2 * mg::tail::tau_I1(p) + mg::tail::tau_Iplus(p)};
      c.note = "also tau(I+) = 9 * 2^-p and tau(complement of I_0) <= tau(I_1) + tau(I_2) + tau(I+)";
      return mg::tail::tau_I1(p) == Rational{12 * pow2(-p)} && mg::tail::tau_Iplus(p) == Rational{9 * pow2(-p)} && cover
                 ? Status::kPass
                 : Status::kFail;
    });
  }
  run.equal("c08.root-bound.symbolic", [] { return std::pair<Value, Value>{Rational{19}, Rational{1 + mg::tail::tau_all()}}; },
            "1 + sum 2^-(|t1|+|t2|+j)");
  for (int s = 0; s <= 8; ++s) {
    run.check("c08.root.s" + tag(s), [&](CheckResult& c) {
      const auto a = mg::besicovitch_hat(s, 0, {0, 0}, opts.caps);
      c.expected = Rational{19};
      c.actual = a.value;
      return a.value <= 19 ? Status::kPass : Status::kFail;
    });
  }

  Caps k4 = opts.caps;
  k4.line_set_k = 4;
  for (int t1 = -4; t1 <= 4; ++t1) {
    for (int t2 = -4; t2 <= 4; ++t2) {
      for (int j = 0; j <= 4; ++j) {
        run.check(
            "c09.coeff.t" + tag(t1) + "_" + tag(t2) + ".j" + tag(j),
            [&](CheckResult& c) {
              const auto co = mg::coefficient_select({t1, t2}, j, k4);
              c.expected = pow2(-(std::abs(t1) + std::abs(t2) + j));
              c.actual = co.c;
              c.note = "clause " + std::to_string(co.clause);
              return co.c <= std::get<Rational>(c.expected) ? Status::kPass : Status::kFail;
            },
            true);
      }
    }
  }

  for (int t1 = -2; t1 <= 2; ++t1) {
    for (int t2 = -2; t2 <= 2; ++t2) {
      for (int k = 0; k <= 3; ++k) {
        run.holds("c10.lineset.t" + tag(t1) + "_" + tag(t2) + ".k" + tag(k), [&] {
          Caps caps = opts.caps;
          caps.line_set_k = std::max(caps.line_set_k, k + 1);
          return region_subset(fractal::H_region({t1, t2}, k + 1, caps), fractal::H_region({t1, t2}, k, caps));
        });
      }
    }
  }
}

void fubini_suite(Runner& run, const Options&) {
  const auto regions = sample_regions(2, 7);
  const auto m1 = mg::weighted_sum({{1, mg::y_axis()}, {1, mg::open_set(regions[0])}});
  const auto lift = mg::product_lift(m1, mg::constant(1, Rational{1, 2}));
  run.holds("c12.additive", [&] {
    for (int r = 0; r <= 3; ++r) {
      for (const auto& q : mg::cubes_at(3, r)) {
        if (mg::mg_value(*lift, q) != mg::mg_value(*m1, q.project(0, 2)) + Rational{1, 2}) return false;
      }
    }
    return true;
  }, "all 585 cubes with r <= 3");
  run.holds("c12.fair", [&] { return fair_everywhere(*lift, 3, 3); });
  const auto zero_lift = mg::product_lift(mg::y_axis(), mg::constant(1, 0));
  const std::vector<std::vector<Rational>> points{{0, Rational{1, 3}}, {Rational{1, 1024}, Rational{1, 2}}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    run.check("c12.crossings." + tag(static_cast<int>(i)), [&](CheckResult& c) {
      const auto flat = mg::trace(*mg::y_axis(), points[i], 12);
      for (const Rational& z : {Rational{0}, Rational{5, 7}}) {
        auto x3 = points[i];
        x3.push_back(z);
        const auto lifted = mg::trace(*zero_lift, x3, 12);
        if (lifted.entries != flat.entries) return Status::kFail;
        for (int e = 1; e <= 8; ++e) {
          if (lifted.first_crossing(pow2(e)) != flat.first_crossing(pow2(e))) return Status::kFail;
        }
      }
      c.note = "thresholds 2^1..2^8, z in {0, 5/7}";
      return Status::kPass;
    });
  }
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

Status parse_status(std::string_view s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "skipped") return Status::kSkipped;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

bool VerificationReport::ok() const { return count(Status::kFail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

std::vector<std::string> suite_names() {
  return {"all", "fairness", "schoenberg", "nesting", "besicovitch", "kakeya", "fubini"};
}

VerificationReport run_suite(std::string_view suite, const Options& opts) {
  using Suite = void (*)(Runner&, const Options&);
  const std::vector<std::pair<std::string_view, Suite>> table{
      {"fairness", fairness_suite}, {"schoenberg", schoenberg_suite}, {"nesting", nesting_suite},
      {"besicovitch", besicovitch_suite}, {"kakeya", kakeya_suite}, {"fubini", fubini_suite}};
  Runner run{std::string(suite)};
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) {
      fn(run, opts);
      found = true;
    }
  }
  if (!found) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return run.take();
}

namespace {

io::Json value_json(const Value& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
  if (std::holds_alternative<Rational>(v)) return to_text(std::get<Rational>(v));
  return nullptr;
}

Value value_from(const io::Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return io::rational_from(j);
  if (j.is_null()) return std::monostate{};
  throw ParseError("check value: expected boolean, rational string or null");
}

}  // namespace

io::Json to_json(const VerificationReport& r, bool with_timings) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks) {
    io::Json j{{"id", c.id},
               {"status", std::string(to_string(c.status))},
               {"expected", value_json(c.expected)},
               {"actual", value_json(c.actual)},
               {"note", c.note}};
    if (with_timings) j["elapsed_s"] = c.elapsed_s;
    checks.push_back(std::move(j));
  }
  return io::Json{{"suite", r.suite},
                  {"checks", std::move(checks)},
                  {"summary",
                   {{"pass", r.count(Status::kPass)},
                    {"fail", r.count(Status::kFail)},
                    {"skipped", r.count(Status::kSkipped)}}}};
}

VerificationReport report_from(const io::Json& j) {
  if (!j.is_object() || !j.contains("suite") || !j.contains("checks") || !j["checks"].is_array()) {
    throw ParseError("report: expected {suite, checks}");
  }
  VerificationReport r;
  r.suite = j["suite"].get<std::string>();
  for (const auto& c : j["checks"]) {
    CheckResult cr;
    cr.id = c.at("id").get<std::string>();
    cr.status = parse_status(c.at("status").get<std::string>());
    cr.expected = value_from(c.at("expected"));
    cr.actual = value_from(c.at("actual"));
    cr.note = c.at("note").get<std::string>();
    if (c.contains("elapsed_s")) cr.elapsed_s = c["elapsed_s"].get<double>();
    r.checks.push_back(std::move(cr));
  }
  return r;
}

std::vector<Region> sample_regions(std::size_t count, unsigned seed) {
  std::mt19937 eng(seed);
  // Raw engine output keeps the sequence identical across standard libraries.
  auto coord = [&] { return make_rational(static_cast<std::int64_t>(eng() % 65), 64); };
  std::vector<Region> out;
  while (out.size() < count) {
    Region r;
    const unsigned parts = 1 + eng() % 3;
    while (r.parts().size() < parts) {
      const unsigned n = 3 + eng() % 4;
      std::vector<Point2> pts;
      for (unsigned i = 0; i < n; ++i) pts.push_back({coord(), coord()});
      ConvexPoly p = ConvexPoly::hull(std::move(pts));
      // Keep the parts inside [0,1)^2 and away from slivers.
      if (!p.empty() && poly_area(p) >= Rational{1, 64} && p.bbox().xhi < 1 && p.bbox().yhi < 1) r.add(std::move(p));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kakeya::verify
