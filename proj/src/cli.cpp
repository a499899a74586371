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

#include "kakeya/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "kakeya/dual_fractal.hpp"
#include "kakeya/errors.hpp"
#include "kakeya/json_io.hpp"
#include "kakeya/martingale.hpp"
#include "kakeya/perron.hpp"
#include "kakeya/svg.hpp"
#include "kakeya/verify.hpp"

namespace kakeya::cli {
namespace {

using io::Json;

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": expected an integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what, std::size_t lo, std::size_t hi) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text)) out.push_back(parse_int(part, what));
  if (out.size() < lo || out.size() > hi) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(lo) +
                     (lo == hi ? "" : ".." + std::to_string(hi)) + " comma-separated values");
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const char* what, std::size_t lo, std::size_t hi) {
  std::vector<Rational> out;
  for (const auto& part : split(text)) out.push_back(parse_rational(part));
  if (out.size() < lo || out.size() > hi) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(lo) +
                     (lo == hi ? "" : ".." + std::to_string(hi)) + " comma-separated rationals");
  }
  return out;
}

fractal::Shift parse_shift(const std::string& text) {
  auto t = parse_ints(text, "--t", 2, 2);
  return {t[0], t[1]};
}

perron::Triangle parse_triangle(const std::string& text) {
  auto v = parse_rationals(text, "--triangle", 6, 6);
  return perron::Triangle::make({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

Region read_region_file(const std::string& path) {
  if (path.empty()) throw ParseError("--which open-set needs --g FILE (a Region JSON document)");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::region_from(io::parse(buf.str()));
}

void emit(std::ostream& out, const Json& j) { out << io::dump(j) << '\n'; }

Region triangles_region(const std::vector<perron::Triangle>& ts) { return perron::union_of(ts); }

/// Shared flags of the `mg` subcommands.
struct MgFlags {
  std::string which;
  std::string g_file;
  int t_max = 0;
  int j_max = -1;
};

mg::SpecPtr build_spec(const MgFlags& f, const Caps& caps) {
  if (f.which == "open-set") return mg::open_set(read_region_file(f.g_file));
  if (f.which == "y-axis") return mg::y_axis();
  if (f.which == "besicovitch") return mg::besicovitch_trunc(f.t_max, std::max(f.j_max, 0), caps.line_set_k, caps);
  if (f.which == "kakeya") return mg::kakeya_trunc(f.j_max < 0 ? caps.kakeya_j : f.j_max, caps);
  throw ParseError("unknown martingale '" + f.which + "'");
}

/// Three coordinates evaluate the planar martingale lifted by the zero
/// martingale on the third axis.
mg::SpecPtr fit_dimension(mg::SpecPtr m, std::size_t dims) {
  if (dims == 3) return mg::product_lift(std::move(m), mg::constant(1, 0));
  return m;
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-rational laboratory for Besicovitch and Kakeya constructions", "kakeya_lab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::function<int()> action;

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  };

  // fractal ------------------------------------------------------------------
  auto* fractal_cmd = app.add_subcommand("fractal", "fractal dust stages")->require_subcommand(1);
  int k = 0;
  auto* fstage = fractal_cmd->add_subcommand("stage", "the 4^k squares of stage k");
  fstage->add_option("--k", k)->required();
  add_format(fstage);
  fstage->callback([&] {
    action = [&] {
      const auto squares = fractal::stage(k, Caps::from_env());
      if (format == "svg") {
        Region r;
        for (const auto& s : squares) r.add(ConvexPoly::from_box(s.box()));
        out << svg::emit_svg({{"window", Region{{ConvexPoly::from_box(AxisBox::unit())}}}, {"ink", r}},
                             "fractal stage " + std::to_string(k));
        return int{kOk};
      }
      Json list = Json::array();
      for (const auto& s : squares) list.push_back(io::to_json(s));
      emit(out, Json{{"k", k}, {"squares", std::move(list)}});
      return int{kOk};
    };
  });
  std::string digits;
  auto* fpoint = fractal_cmd->add_subcommand("point", "parameter point selected by slope digits");
  fpoint->add_option("--slope-digits", digits)->required();
  fpoint->add_option("--k", k)->required();
  fpoint->callback([&] {
    action = [&] {
      std::vector<int> ds;
      for (auto d : parse_ints(digits, "--slope-digits", 1, 4096)) ds.push_back(static_cast<int>(d));
      for (int d : ds) {
        if (d < 0 || d > 3) throw ParseError("--slope-digits: digits must be 0..3");
      }
      const Point2 p = fractal::slope_to_point(ds, k);
      std::vector<int> prefix(ds.begin(), ds.begin() + k);
      emit(out, Json{{"k", k},
                     {"point", io::to_json(p)},
                     {"square", io::to_json(fractal::fractal_square(fractal::FractalWord(prefix)))}});
      return int{kOk};
    };
  });

  // lineset ------------------------------------------------------------------
  auto* lineset_cmd = app.add_subcommand("lineset", "translated line sets H_{t,k}")->require_subcommand(1);
  std::string t_text;
  auto* lregion = lineset_cmd->add_subcommand("region", "H_{t,k} as a region");
  lregion->add_option("--t", t_text)->required();
  lregion->add_option("--k", k)->required();
  add_format(lregion);
  lregion->callback([&] {
    action = [&] {
      const auto t = parse_shift(t_text);
      const Caps caps = Caps::from_env();
      const Region h = fractal::H_region(t, k, caps);
      if (format == "svg") {
        out << svg::emit_svg({{"window", Region{{ConvexPoly::from_box(AxisBox::unit())}}}, {"ink", h}},
                             "line set H_{t,k}");
        return int{kOk};
      }
      emit(out, Json{{"t", {t.t1, t.t2}}, {"k", k}, {"h", to_text(fractal::h(t, k, caps))}, {"region", io::to_json(h)}});
      return int{kOk};
    };
  });
  auto* larea = lineset_cmd->add_subcommand("area", "h(t,k) = m(H_{t,k})");
  larea->add_option("--t", t_text)->required();
  larea->add_option("--k", k)->required();
  larea->callback([&] {
    action = [&] {
      const auto t = parse_shift(t_text);
      emit(out, Json{{"t", {t.t1, t.t2}}, {"k", k}, {"h", to_text(fractal::h(t, k, Caps::from_env()))}});
      return int{kOk};
    };
  });
  int j = 0;
  int kcap = 0;
  auto* lkindex = lineset_cmd->add_subcommand("kindex", "least k with h(t,k) <= 2^-j");
  lkindex->add_option("--t", t_text)->required();
  lkindex->add_option("--j", j)->required();
  lkindex->add_option("--cap", kcap)->required();
  lkindex->callback([&] {
    action = [&] {
      const auto t = parse_shift(t_text);
      const Caps caps = Caps::from_env();
      if (kcap > caps.line_set_k) {
        throw CapExceeded("--cap " + std::to_string(kcap) + " exceeds the line-set budget " +
                          std::to_string(caps.line_set_k) + " (raise KAKEYA_LAB_CAP_K)");
      }
      emit(out, Json{{"t", {t.t1, t.t2}}, {"j", j}, {"k", fractal::k_index(t, j, kcap, caps)}});
      return int{kOk};
    };
  });

  // mg -----------------------------------------------------------------------
  auto* mg_cmd = app.add_subcommand("mg", "martingales on dyadic cubes")->require_subcommand(1);
  MgFlags mf;
  auto add_mg = [&](CLI::App* sub) {
    sub->add_option("--which", mf.which)
        ->required()
        ->check(CLI::IsMember({"open-set", "y-axis", "besicovitch", "kakeya"}));
    sub->add_option("--g", mf.g_file, "Region JSON file for open-set");
  };
  int s = 0;
  int r = 0;
  std::string u_text;
  auto* mvalue = mg_cmd->add_subcommand("value", "capital on one cube");
  add_mg(mvalue);
  mvalue->add_option("--s", s, "accuracy parameter of the truncated martingales");
  mvalue->add_option("--r", r)->required();
  mvalue->add_option("--u", u_text)->required();
  mvalue->callback([&] {
    action = [&] {
      const Caps caps = Caps::from_env();
      const auto u = parse_ints(u_text, "--u", 2, 3);
      const auto q = mg::DyadicCube::make(r, u);
      Json j_out{{"which", mf.which}, {"cube", io::to_json(q)}};
      const bool planar_hat = (mf.which == "besicovitch" || mf.which == "kakeya") && u.size() == 2;
      if (planar_hat) {
        const auto a = mf.which == "besicovitch" ? mg::besicovitch_hat(s, r, u, caps) : mg::kakeya_mg_hat(s, r, u, caps);
        j_out["s"] = s;
        j_out["value"] = to_text(a.value);
        j_out["error_bound"] = to_text(a.error_bound);
      } else {
        if (mf.which == "besicovitch" || mf.which == "kakeya") {
          throw ParseError("--which " + mf.which + " takes a two-coordinate --u");
        }
        j_out["value"] = to_text(mg::mg_value(*fit_dimension(build_spec(mf, caps), u.size()), q));
      }
      emit(out, j_out);
      return int{kOk};
    };
  });
  std::string point_text;
  int rmax = 0;
  auto* mtrace = mg_cmd->add_subcommand("trace", "capital along a point's cubes");
  add_mg(mtrace);
  mtrace->add_option("--point", point_text)->required();
  mtrace->add_option("--rmax", rmax)->required();
  mtrace->add_option("--t-max", mf.t_max, "besicovitch: |t1|, |t2| <= T (default 0)");
  mtrace->add_option("--j-max", mf.j_max, "besicovitch/kakeya: j <= J");
  mtrace->callback([&] {
    action = [&] {
      const auto x = parse_rationals(point_text, "--point", 2, 3);
      const auto m = fit_dimension(build_spec(mf, Caps::from_env()), x.size());
      Json j_out = io::to_json(mg::trace(*m, x, rmax));
      j_out["which"] = mf.which;
      emit(out, j_out);
      return int{kOk};
    };
  });
  auto* mfair = mg_cmd->add_subcommand("fairness", "residuals d(Q) - mean over children, all cubes r <= rmax");
  add_mg(mfair);
  mfair->add_option("--rmax", rmax)->required();
  mfair->add_option("--t-max", mf.t_max);
  mfair->add_option("--j-max", mf.j_max);
  mfair->callback([&] {
    action = [&] {
      const auto m = build_spec(mf, Caps::from_env());
      std::size_t cubes = 0;
      std::size_t nonzero = 0;
      Rational worst = 0;
      for (int level = 0; level <= rmax; ++level) {
        for (const auto& q : mg::cubes_at(2, level)) {
          ++cubes;
          Rational res = mg::fairness_residual(*m, q);
          if (sgn(res) < 0) res = -res;
          if (sgn(res) != 0) ++nonzero;
          if (res > worst) worst = res;
        }
      }
      emit(out, Json{{"which", mf.which},
                     {"rmax", rmax},
                     {"cubes", cubes},
                     {"nonzero", nonzero},
                     {"max_abs_residual", to_text(worst)}});
      return nonzero == 0 ? int{kOk} : int{kCheckFailed};
    };
  });

  // perron -------------------------------------------------------------------
  auto* perron_cmd = app.add_subcommand("perron", "Perron trees")->require_subcommand(1);
  std::string tri_text;
  auto* psprout = perron_cmd->add_subcommand("sprout", "sprouted tree P_k(tau)");
  psprout->add_option("--k", k)->required();
  psprout->add_option("--triangle", tri_text, "UX,UY,VX,VY,WX,WY")->required();
  add_format(psprout);
  psprout->callback([&] {
    action = [&] {
      const auto t = parse_triangle(tri_text);
      const auto res = perron::sprout(t, k, Caps::from_env());
      if (format == "svg") {
        out << svg::emit_svg({{"outline", Region{{perron::enclosing_trapezoid(t)}}},
                              {"shade", Region{{t.poly()}}},
                              {"ink", res.tree}},
                             "Perron tree, level " + std::to_string(k));
        return int{kOk};
      }
      Json j_out = io::to_json(res);
      j_out["k"] = k;
      j_out["triangle"] = io::to_json(t);
      emit(out, j_out);
      return int{kOk};
    };
  });
  auto* parea = perron_cmd->add_subcommand("area", "computed tree area against m(tau)/(2k+4)");
  parea->add_option("--k", k)->required();
  parea->add_option("--triangle", tri_text)->required();
  parea->callback([&] {
    action = [&] {
      const auto a = perron::perron_area_check(parse_triangle(tri_text), k, Caps::from_env());
      emit(out, Json{{"k", k},
                     {"computed", to_text(a.computed)},
                     {"predicted", to_text(a.predicted)},
                     {"matches", a.matches()}});
      return int{kOk};
    };
  });

  // kakeya -------------------------------------------------------------------
  auto* kakeya_cmd = app.add_subcommand("kakeya", "Kakeya stages")->require_subcommand(1);
  auto* kstage = kakeya_cmd->add_subcommand("stage", "stage j: triangles S_j and thickening G_j");
  kstage->add_option("--j", j)->required();
  add_format(kstage);
  kstage->callback([&] {
    action = [&] {
      const auto st = perron::kakeya_stage(j, Caps::from_env());
      if (format == "svg") {
        out << svg::emit_svg({{"shade", st->G}, {"ink", triangles_region(st->triangles)}},
                             "Kakeya stage " + std::to_string(j));
        return int{kOk};
      }
      emit(out, io::to_json(*st));
      return int{kOk};
    };
  });
  std::string slope_text;
  auto* ksegment = kakeya_cmd->add_subcommand("segment", "segment of length >= 1/3 in direction (slope, 1)");
  ksegment->add_option("--slope", slope_text)->required();
  ksegment->add_option("--j", j)->required();
  ksegment->callback([&] {
    action = [&] {
      const Rational slope = parse_rational(slope_text);
      const auto seg = perron::direction_segment(slope, j, Caps::from_env());
      if (!seg) {
        emit(out, Json{{"found", false}, {"j", j}, {"slope", to_text(slope)}});
        return int{kCheckFailed};
      }
      emit(out, Json{{"found", true}, {"j", j}, {"slope", to_text(slope)}, {"p", io::to_json(seg->p)},
                     {"q", io::to_json(seg->q)}});
      return int{kOk};
    };
  });

  // verify -------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  verify::Options vopts{};
  bool timings = false;
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--k-max", vopts.k_max);
  verify_cmd->add_option("--j-max", vopts.j_max);
  verify_cmd->add_flag("--timings", timings, "include wall-clock times in the report");
  verify_cmd->callback([&] {
    action = [&] {
      vopts.caps = Caps::from_env();
      const auto report = verify::run_suite(suite, vopts);
      emit(out, verify::to_json(report, timings));
      err << "verify " << suite << ": " << report.count(verify::Status::kPass) << " pass, "
          << report.count(verify::Status::kFail) << " fail, " << report.count(verify::Status::kSkipped)
          << " skipped\n";
      return report.ok() ? int{kOk} : int{kCheckFailed};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (!action) {
    err << "usage error: no command\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    // DomainError and ParseError: bad input values.
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace kakeya::cli
