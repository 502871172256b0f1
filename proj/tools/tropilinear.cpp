// Command-line front end.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 detection failed or search
// budget exhausted, 3 infeasible.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropilinear/tropilinear.hpp"

namespace tl = tropilinear;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kUndecided = 2, kInfeasible = 3;

bool g_json = false;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tl::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw tl::Error("cannot write " + path);
  out << text;
}

json to_json(const tl::ExtInt& v) {
  if (v.is_finite() && v.value() >= std::numeric_limits<long long>::min() &&
      v.value() <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v.value());
  return v.str();
}

json to_json(const tl::TropVector& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

json to_json(const tl::TropMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return {{"flavor", tl::to_string(m.flavor())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const tl::Period& p) {
  json a = json::array();
  for (const auto& e : p) a.push_back(to_json(tl::ExtInt(e)));
  return a;
}

json to_json(const tl::SemilinearSet& s) {
  json comps = json::array();
  for (const auto& c : s.components()) {
    json periods = json::array();
    for (const auto& p : c.periods) periods.push_back(to_json(p));
    comps.push_back({{"base", to_json(c.base)}, {"periods", periods}});
  }
  return {{"dim", s.dim()}, {"components", comps}};
}

json to_json(const tl::CyclicityCertificate& c) {
  json inc = json::array();
  for (const auto& d : c.increments) inc.push_back(to_json(d));
  return {{"transient", c.transient}, {"period", c.period}, {"window", c.window}, {"increments", inc}};
}

std::string period_text(const tl::Period& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + p[i].str();
  return s;
}

std::string certificate_text(const std::string& what, const tl::CyclicityCertificate& c) {
  std::string s = "# " + what + ": transient " + std::to_string(c.transient) + ", period " +
                  std::to_string(c.period) + ", window " + std::to_string(c.window) + "\n";
  for (std::size_t l = 0; l < c.increments.size(); ++l)
    s += "#   increment " + std::to_string(l) + ": " + period_text(c.increments[l]) + "\n";
  return s;
}

void emit(const std::string& text, const json& j) {
  if (g_json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

tl::TropVector vector_arg(const std::string& s, std::size_t dim) {
  tl::TropVector v = tl::parse_vector(s);
  if (v.size() != dim)
    throw tl::DimensionError("vector '" + s + "' has " + std::to_string(v.size()) +
                             " entries, expected " + std::to_string(dim));
  return v;
}

tl::GeneratorSet load_gens(const std::string& path) {
  return tl::GeneratorSet(tl::parse_semilinear(slurp(path)));
}

tl::LtiSystem load_system(const std::string& path) { return tl::parse_system(slurp(path)); }

int decision_exit(tl::Decision d) { return d == tl::Decision::BoundExhausted ? kUndecided : kOk; }

json witness_json(const tl::SpanWitness& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.generators.size(); ++i)
    a.push_back({{"generator", to_json(w.generators[i])}, {"scalar", to_json(w.scalars[i])}});
  return a;
}

std::string witness_text(const tl::SpanWitness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.generators.size(); ++i)
    s += "  " + w.scalars[i].str() + " (x) (" + tl::format_vector(w.generators[i]) + ")\n";
  return s;
}

// Linear systems: one equation per line, "a1 ... ak" or "a1 ... ak = c".
tl::LinSystem parse_lin_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  tl::LinSystem sys;
  while (tl::detail::next_content_line(in, line, lineno)) {
    std::string lhs = line, rhs = "0";
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      lhs = line.substr(0, eq);
      rhs = line.substr(eq + 1);
    }
    tl::IntVec row;
    try {
      for (const auto& v : tl::parse_vector(lhs)) {
        if (!v.is_finite()) throw tl::Error("coefficients must be finite");
        row.push_back(tl::to_int64(v.value()));
      }
      tl::TropVector r = tl::parse_vector(rhs);
      if (r.size() != 1 || !r[0].is_finite()) throw tl::Error("right-hand side must be one integer");
      sys.rhs.push_back(tl::to_int64(r[0].value()));
    } catch (const tl::ParseError&) {
      throw;
    } catch (const tl::Error& e) {
      throw tl::ParseError(lineno, e.what());
    }
    if (sys.matrix.empty()) sys.unknowns = row.size();
    else if (row.size() != sys.unknowns) throw tl::ParseError(lineno, "equations differ in length");
    sys.matrix.push_back(std::move(row));
  }
  if (sys.matrix.empty()) throw tl::ParseError(lineno, "no equations");
  return sys;
}

std::string int_vec_text(const tl::IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact max-plus algebra: semilinear sets, rational semimodules, max-plus systems"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  tl::DetectionParams det;
  auto add_detection = [&](CLI::App* sub) {
    sub->add_option("--window", det.window, "Confirmation window W")->check(CLI::PositiveNumber);
    sub->add_option("--max-period", det.max_period, "Largest period tried")->check(CLI::PositiveNumber);
    sub->add_option("--max-transient", det.max_transient, "Largest transient tried (default 200 n)");
  };

  std::string sys_path;
  std::size_t horizon = 0;
  bool omega = false;

  // reach
  auto* reach = app.add_subcommand("reach", "Reachability matrix R_k or semilinear generators of R_omega");
  reach->add_option("--sys", sys_path, "System file")->required()->check(CLI::ExistingFile);
  auto* reach_k_opt = reach->add_option("--k", horizon, "Horizon k");
  auto* reach_w_opt = reach->add_flag("--omega", omega, "Infinite horizon");
  reach_k_opt->excludes(reach_w_opt);
  add_detection(reach);

  // observe
  auto* observe = app.add_subcommand("observe", "Observability matrix O_k or periodic structure of O_omega");
  observe->add_option("--sys", sys_path, "System file")->required()->check(CLI::ExistingFile);
  auto* obs_k_opt = observe->add_option("--k", horizon, "Horizon k");
  auto* obs_w_opt = observe->add_flag("--omega", omega, "Infinite horizon");
  obs_k_opt->excludes(obs_w_opt);
  add_detection(observe);

  std::string xi, xi2, target;
  auto* classmax = app.add_subcommand("classmax", "Greatest element of the observable congruence class");
  classmax->add_option("--sys", sys_path, "System file")->required()->check(CLI::ExistingFile);
  classmax->add_option("--xi", xi, "State, e.g. \"-2 -9 -11\"")->required();
  add_detection(classmax);

  auto* congruent = app.add_subcommand("congruent", "Whether two states are observably congruent");
  congruent->add_option("--sys", sys_path, "System file")->required()->check(CLI::ExistingFile);
  congruent->add_option("--xi", xi, "First state")->required();
  congruent->add_option("--xi2", xi2, "Second state")->required();
  add_detection(congruent);

  auto* control = app.add_subcommand("control", "Inputs driving the state to a target in k steps");
  control->add_option("--sys", sys_path, "System file")->required()->check(CLI::ExistingFile);
  control->add_option("--k", horizon, "Horizon k")->required()->check(CLI::PositiveNumber);
  control->add_option("--target", target, "Target state")->required();

  std::string gens_path, and_path, vec;
  auto* member = app.add_subcommand(
      "member",
      "Span membership for a finite or semilinear generator set. With --and, membership in the "
      "intersection of two spans (the intersection itself is not constructed)");
  member->add_option("--gens", gens_path, "Generator file (semilinear format)")->required()->check(CLI::ExistingFile);
  member->add_option("--and", and_path, "Second generator file")->check(CLI::ExistingFile);
  member->add_option("--x", vec, "Vector")->required();

  // sl
  auto* sl = app.add_subcommand("sl", "Semilinear set operations");
  sl->require_subcommand(1);
  std::string sl_a, sl_b, keep;
  auto sl_two = [&](const std::string& name, const std::string& desc) {
    auto* s = sl->add_subcommand(name, desc);
    s->add_option("A", sl_a, "First set")->required()->check(CLI::ExistingFile);
    s->add_option("B", sl_b, "Second set")->required()->check(CLI::ExistingFile);
    return s;
  };
  auto* sl_union = sl_two("union", "Union");
  auto* sl_sum = sl_two("sum", "Monoid sum {a + b}");
  auto* sl_intersect = sl_two("intersect", "Intersection");
  auto* sl_star = sl->add_subcommand("star", "Submonoid generated by the base vectors of a finite set");
  sl_star->add_option("A", sl_a, "Finite set")->required()->check(CLI::ExistingFile);
  auto* sl_project = sl->add_subcommand("project", "Keep a subset of coordinates (0-based)");
  sl_project->add_option("A", sl_a, "Set")->required()->check(CLI::ExistingFile);
  sl_project->add_option("--keep", keep, "Coordinates to keep, e.g. \"0 2\"")->required();
  auto* sl_member = sl->add_subcommand("member", "Membership of a vector");
  sl_member->add_option("A", sl_a, "Set")->required()->check(CLI::ExistingFile);
  sl_member->add_option("--x", vec, "Vector")->required();
  auto* sl_normalize = sl->add_subcommand("normalize", "Print the canonical normal form");
  sl_normalize->add_option("A", sl_a, "Set")->required()->check(CLI::ExistingFile);

  std::string lin_path;
  auto* hilbert = app.add_subcommand(
      "hilbert", "Minimal nonnegative solutions and Hilbert basis of a linear system (one equation per line, "
                 "\"a1 ... ak\" or \"a1 ... ak = c\")");
  hilbert->add_option("FILE", lin_path, "System file")->required()->check(CLI::ExistingFile);

  std::string teg_path;
  auto* teg = app.add_subcommand("teg", "Timed event graphs");
  teg->require_subcommand(1);
  auto* teg_compile = teg->add_subcommand("compile", "Print the dater system of a timed event graph");
  teg_compile->add_option("FILE", teg_path, "TEG file")->required()->check(CLI::ExistingFile);

  std::size_t max_n = 5, max_len = 10;
  std::string out_path, svg_path;
  auto* gallery = app.add_subcommand("gallery", "Simon's automaton and its irrational reachable space");
  gallery->require_subcommand(1);
  auto* g_simon = gallery->add_subcommand("simon", "Growth law: least |w| with s(w) >= n");
  g_simon->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 8));
  auto* g_figcs = gallery->add_subcommand("figcs", "Points (s(w), -|w|, 0) for |w| <= max-len");
  g_figcs->add_option("--max-len", max_len, "Largest word length")->check(CLI::Range(0, 22));
  g_figcs->add_option("--out", out_path, "CSV output file");
  g_figcs->add_option("--svg", svg_path, "SVG scatter output file");

  std::string mode = "exp";
  double beta = 1.0;
  std::size_t mult = 0;
  bool segments = false;
  auto* render = app.add_subcommand("render", "Draw the elements of a 3-dimensional set as SVG");
  render->add_option("--gens", gens_path, "Set file (semilinear format)")->required()->check(CLI::ExistingFile);
  render->add_option("--mode", mode, "exp, orth or plane")->check(CLI::IsMember({"exp", "orth", "plane"}));
  render->add_option("--beta", beta, "Exponential base")->check(CLI::PositiveNumber);
  render->add_option("--mult", mult, "Period multiplicities 0..M sampled per component");
  render->add_flag("--segments", segments, "Draw tropical segments between all pairs of points");
  render->add_option("--out", out_path, "SVG output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  g_json = format == "json";

  try {
    if (*reach) {
      auto sys = load_system(sys_path);
      if (omega) {
        auto r = tl::reach_omega(sys, det);
        std::string text = tl::format_semilinear(r.generators.set());
        json certs = json::array();
        for (std::size_t j = 0; j < r.certificates.size(); ++j) {
          text += certificate_text("column " + std::to_string(j), r.certificates[j]);
          certs.push_back(to_json(r.certificates[j]));
        }
        emit(text, {{"generators", to_json(r.generators.set())}, {"certificates", certs}});
      } else {
        if (!*reach_k_opt) throw tl::Error("reach needs --k or --omega");
        auto m = tl::reach_k(sys, horizon);
        emit(tl::format_matrix(m), to_json(m));
      }
      return kOk;
    }
    if (*observe) {
      auto sys = load_system(sys_path);
      if (omega) {
        auto b = tl::obs_omega(sys, det);
        std::string text = tl::format_matrix(b.block());
        json rows = json::array();
        for (std::size_t q = 0; q < b.rows.size(); ++q) {
          text += certificate_text("output " + std::to_string(q), b.rows[q]);
          rows.push_back(to_json(b.rows[q]));
        }
        emit(text, {{"block", to_json(b.block())}, {"transient", b.transient()}, {"period", b.period()},
                    {"certificates", rows}});
      } else {
        if (!*obs_k_opt) throw tl::Error("observe needs --k or --omega");
        auto m = tl::obs_k(sys, horizon);
        emit(tl::format_matrix(m), to_json(m));
      }
      return kOk;
    }
    if (*classmax) {
      auto sys = load_system(sys_path);
      auto b = tl::obs_omega(sys, det);
      auto r = tl::class_max(b, vector_arg(xi, sys.states()));
      emit(tl::format_vector(r) + "\n", {{"class_max", to_json(r)}});
      return kOk;
    }
    if (*congruent) {
      auto sys = load_system(sys_path);
      auto b = tl::obs_omega(sys, det);
      bool eq = tl::congruent(b, vector_arg(xi, sys.states()), vector_arg(xi2, sys.states()));
      emit(eq ? "true\n" : "false\n", {{"congruent", eq}});
      return kOk;
    }
    if (*control) {
      auto sys = load_system(sys_path);
      auto u = tl::control_solve(sys, horizon, vector_arg(target, sys.states()));
      if (!u) {
        emit("infeasible\n", {{"feasible", false}});
        return kInfeasible;
      }
      std::string text = "U: " + tl::format_vector(*u) + "\n";
      json seq = json::array();
      auto chron = tl::chronological_inputs(*u, sys.inputs());
      for (std::size_t k = 0; k < chron.size(); ++k) {
        text += "u(" + std::to_string(k + 1) + "): " + tl::format_vector(chron[k]) + "\n";
        seq.push_back(to_json(chron[k]));
      }
      emit(text, {{"feasible", true}, {"U", to_json(*u)}, {"inputs", seq}});
      return kOk;
    }
    if (*member) {
      auto g = load_gens(gens_path);
      auto x = vector_arg(vec, g.dim());
      if (!and_path.empty()) {
        auto h = load_gens(and_path);
        auto d = tl::intersection_member(g, h, x);
        emit(std::string(tl::to_string(d)) + "\n", {{"member", tl::to_string(d)}});
        return decision_exit(d);
      }
      auto r = tl::span_contains(g, x);
      std::string text = std::string(tl::to_string(r.decision)) + "\n";
      if (r.member()) text += "witness:\n" + witness_text(r.witness);
      emit(text, {{"member", tl::to_string(r.decision)}, {"witness", witness_json(r.witness)}});
      return decision_exit(r.decision);
    }
    if (*sl) {
      auto a = tl::parse_semilinear(slurp(sl_a));
      std::optional<tl::SemilinearSet> out;
      if (*sl_union) out = tl::set_union(a, tl::parse_semilinear(slurp(sl_b)));
      if (*sl_sum) out = tl::msum(a, tl::parse_semilinear(slurp(sl_b)));
      if (*sl_intersect) out = tl::intersect(a, tl::parse_semilinear(slurp(sl_b)));
      if (*sl_normalize) out = a;
      if (*sl_star) {
        if (!a.is_finite_set()) throw tl::Error("star expects a finite set (no periods)");
        std::vector<tl::TropVector> gens;
        for (const auto& c : a.components()) gens.push_back(c.base);
        out = tl::star(a.dim(), gens);
      }
      if (*sl_project) {
        std::vector<std::size_t> idx;
        std::istringstream ks(keep);
        for (long long i; ks >> i;) {
          if (i < 0) throw tl::Error("coordinate indices are nonnegative");
          idx.push_back(static_cast<std::size_t>(i));
        }
        if (!ks.eof()) throw tl::Error("bad --keep list");
        out = tl::project(a, idx);
      }
      if (*sl_member) {
        bool m = tl::member(a, vector_arg(vec, a.dim()));
        emit(m ? "true\n" : "false\n", {{"member", m}});
        return kOk;
      }
      emit(tl::format_semilinear(*out), to_json(*out));
      return kOk;
    }
    if (*hilbert) {
      auto sys = parse_lin_system(slurp(lin_path));
      auto s = tl::solve(sys);
      std::string text;
      json mins = json::array(), hb = json::array();
      if (!sys.homogeneous()) {
        for (const auto& v : s.minimal) {
          text += "minimal: " + int_vec_text(v) + "\n";
          mins.push_back(v);
        }
      }
      for (const auto& v : s.hilbert) {
        text += (sys.homogeneous() ? "" : "hilbert: ") + int_vec_text(v) + "\n";
        hb.push_back(v);
      }
      emit(text, {{"minimal", sys.homogeneous() ? json::array({tl::IntVec(sys.unknowns, 0)}) : mins},
                  {"hilbert", hb}});
      return kOk;
    }
    if (*teg_compile) {
      auto sys = tl::compile_teg(tl::parse_teg(slurp(teg_path)));
      json j = {{"A", to_json(sys.a())}, {"B", to_json(sys.b())}, {"C", to_json(sys.c())}};
      emit(tl::format_system(sys), j);
      return kOk;
    }
    if (*g_simon) {
      std::string text = "n min_length expected\n";
      json rows = json::array();
      bool all_ok = true;
      for (std::size_t n = 1; n <= max_n; ++n) {
        std::size_t len = tl::simon_growth(n);
        std::size_t expected = (n * n + n) / 2;
        all_ok = all_ok && len == expected;
        text += std::to_string(n) + " " + std::to_string(len) + " " + std::to_string(expected) + "\n";
        rows.push_back({{"n", n}, {"min_length", len}, {"expected", expected}});
      }
      emit(text, {{"rows", rows}, {"matches", all_ok}});
      return kOk;
    }
    if (*g_figcs) {
      auto pts = tl::fig_cs_points(max_len);
      std::string csv = "s,neg_length,zero,extremal\n";
      json arr = json::array();
      for (const auto& p : pts.all) {
        bool ext = std::find(pts.extremal.begin(), pts.extremal.end(), p) != pts.extremal.end();
        csv += p.s.str() + "," + tl::Integer(-p.length).str() + ",0," + (ext ? "1" : "0") + "\n";
        arr.push_back({{"s", to_json(tl::ExtInt(p.s))},
                       {"neg_length", to_json(tl::ExtInt(tl::Integer(-p.length)))},
                       {"extremal", ext}});
      }
      if (!svg_path.empty()) {
        tl::RenderSpec spec;
        spec.mode = tl::RenderMode::Plane;
        std::vector<tl::TropVector> coords;
        for (const auto& p : pts.extremal) coords.push_back(p.coords());
        tl::Scene sc = tl::make_scene(coords, spec);
        std::vector<tl::TropVector> rest;
        for (const auto& p : pts.all) rest.push_back(p.coords());
        tl::RenderSpec faint = spec;
        tl::Scene all = tl::make_scene(rest, faint);
        // non-extremal points as short crosses
        for (const auto& p : all.points)
          sc.polylines.push_back({{p.x - 0.15, p.y}, {p.x + 0.15, p.y}});
        write_file(svg_path, tl::render_svg(sc, spec));
      }
      if (!out_path.empty()) {
        write_file(out_path, csv);
        if (!g_json) std::cout << pts.all.size() << " points, " << pts.extremal.size() << " extremal\n";
        else std::cout << json{{"points", pts.all.size()}, {"extremal", pts.extremal.size()}}.dump(2) << "\n";
      } else {
        emit(csv, {{"points", arr}});
      }
      return kOk;
    }
    if (*render) {
      auto s = tl::parse_semilinear(slurp(gens_path));
      if (s.dim() != 3) throw tl::DimensionError("render expects dimension 3");
      tl::RenderSpec spec;
      spec.mode = mode == "exp" ? tl::RenderMode::Exponential
                                : mode == "orth" ? tl::RenderMode::Orthogonal : tl::RenderMode::Plane;
      spec.beta = beta;
      tl::Scene sc = tl::make_scene(tl::sample_elements(s, mult), spec, segments);
      if (sc.skipped) std::cerr << "skipped " << sc.skipped << " points that cannot be projected\n";
      std::string svg = tl::render_svg(sc, spec);
      if (out_path.empty()) std::cout << svg;
      else write_file(out_path, svg);
      return kOk;
    }
  } catch (const tl::DetectionFailed& e) {
    std::cerr << "detection_failed: " << e.what() << "\n";
    return kUndecided;
  } catch (const tl::BudgetExhausted& e) {
    std::cerr << "bound_exhausted: " << e.what() << "\n";
    return kUndecided;
  } catch (const tl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const tl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
