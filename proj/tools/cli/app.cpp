#include "app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>

#include "ppk/error.hpp"
#include "problem.hpp"

namespace ppk::cli {

namespace {

struct Options {
  std::string file;
  std::string at;
  bool numeric_check = false;
  double step = NumericCurvatureOptions{}.step;
  bool step_given = false;
  std::string gauge = "default";
  std::string format = "text";
};

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string point_text(const Point& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s;
}

std::string check_text(const Check& c) { return c.passed ? "pass" : "FAIL " + c.detail; }

std::string linear_text(const RVec3& v, const Vars& vars) {
  RatExpr e(vars);
  for (std::size_t k = 0; k < 3; ++k) e += RatExpr::variable(vars, k).scaled(v[k]);
  return e.to_string();
}

TwoForm evaluate(const TwoForm& f, const Point& at) {
  const Vars& vars = f.vars();
  return {RatExpr(vars, f.xy.eval(at)), RatExpr(vars, f.yz.eval(at)), RatExpr(vars, f.zx.eval(at))};
}

std::vector<Point> evaluation_points(const Problem& pr, const Options& o) {
  if (!o.at.empty()) return {parse_point(o.at, pr.vars->size())};
  return points(pr);
}

bool numeric_requested(const Problem& pr, const Options& o) {
  return o.numeric_check || numeric_check_option(pr).value_or(false);
}

double step_size(const Problem& pr, const Options& o) {
  if (o.step_given) return o.step;
  return step_option(pr).value_or(o.step);
}

std::string jacobi_text(const PoissonTensor& t) {
  Jacobiator j = jacobiator(t);
  return j.vanishes() ? "pass" : "FAIL " + j.value.to_string();
}

std::string structure_jacobi_text(const LieStructure& g, const Vars& vars) {
  if (g.is_lie()) return "pass";
  return "FAIL on (" + vars->name(0) + "," + vars->name(1) + "," + vars->name(2) + "): defect " +
         linear_text(g.jacobi_defect(), vars);
}

int cmd_check(const Problem& pr, Report& r) {
  bool ok = true;
  auto add = [&](const std::string& key, const std::string& value) {
    r.add(key, value);
    if (value != "pass") ok = false;
  };
  if (pr.kind == "web") {
    Web3 w = web(pr);
    std::vector<Point> pts = points(pr);
    add("regular at points", pass(web_is_regular_at(w, pts)));
    return ok ? 0 : 1;
  }
  if (pr.kind == "linear_pencil") {
    LieStructure g = structure(pr, "brackets");
    add("jacobi brackets", structure_jacobi_text(g, pr.vars));
    Cocycle a = cocycle(pr, g);
    r.add("cocycle", a.to_string(pr.vars));
    add("cocycle identity", pass(is_cocycle(g, a)));
    return ok ? 0 : 1;
  }
  if (pr.kind == "lie_pencil") {
    LiePencilDef d = lie_def(pr);
    add("jacobi P", structure_jacobi_text(d.p, pr.vars));
    add("jacobi Q", structure_jacobi_text(d.q, pr.vars));
    add("jacobi P+Q", structure_jacobi_text(d.p + d.q, pr.vars));
    return ok ? 0 : 1;
  }
  Pencil pen = pencil_unchecked(pr);
  add("jacobi P", jacobi_text(pen.p()));
  add("jacobi Q", jacobi_text(pen.q()));
  add("jacobi P+Q", jacobi_text(pen.p() + pen.q()));
  if (pr.kind == "reduction") {
    CasimirReport cr = verify_casimirs(pen, casimirs(pr), points(pr));
    for (const auto& c : cr.checks) add(c.name, check_text(c));
  }
  if (pr.kind == "connection") {
    FrameReport fr = verify_frame(pen, frame(pr));
    for (const auto& c : fr.checks) add(c.name, check_text(c));
  }
  return ok ? 0 : 1;
}

int cmd_curvature(const Problem& pr, const Options& o, Report& r) {
  Pencil pen = pencil(pr);
  TwoForm form = curvature(pen);
  int status = 0;
  r.add("curvature", form.to_string());
  if (pr.kind == "linear_pencil" || pr.kind == "lie_pencil") {
    TwoForm special = pr.kind == "linear_pencil"
                          ? [&] {
                              LieStructure g = structure(pr, "brackets");
                              return linear_pencil_curvature(g, cocycle(pr, g), pr.vars);
                            }()
                          : lie_pencil_curvature(lie_def(pr), pr.vars);
    bool same = special == form;
    r.add("algebraic formula", same ? "agrees" : "DIFFERS " + special.to_string());
    if (!same) status = 1;
  }
  r.add("verdict", form.is_zero() ? "FLAT" : "NON-FLAT");

  std::vector<Point> pts = evaluation_points(pr, o);
  for (const auto& p : pts) r.add("value at " + point_text(p), evaluate(form, p).to_string());

  if (numeric_requested(pr, o)) {
    if (pts.empty()) throw InputError("--numeric-check needs --at or points in the file");
    NumericCurvatureOptions nopt;
    nopt.step = step_size(pr, o);
    NumericPencil np = NumericPencil::from(pen);
    double worst = 0.0;
    for (const auto& p : pts) {
      std::array<double, 3> x{p[0].get_d(), p[1].get_d(), p[2].get_d()};
      auto num = curvature_numeric(np, x, nopt);
      std::span<const double> at(x);
      worst = std::max({worst, std::abs(num[0] - form.xy.eval(at)), std::abs(num[1] - form.yz.eval(at)),
                        std::abs(num[2] - form.zx.eval(at))});
    }
    r.add("numeric step", sci(nopt.step));
    r.add("numeric max deviation", sci(worst));
    bool ok = worst <= 1e-6;
    r.add("numeric check", pass(ok));
    if (!ok) status = 1;
  }
  return status;
}

int cmd_linearize(const Problem& pr, const Options& o, Report& r) {
  std::vector<Point> pts = evaluation_points(pr, o);
  if (pts.empty()) throw InputError("linearize needs --at or a point in the file");
  Pencil pen = pencil(pr);
  const Point& at = pts.front();
  ObstructionReport rep = flatness_obstruction_report(pen, at);
  const Linearization& lin = rep.linearization;
  r.add("point", point_text(at));
  if (lin.kind == Linearization::Kind::linear) {
    r.add("rank", "2");
    r.add("spectrum", "(" + lin.alpha.get_str() + ":" + lin.beta.get_str() + ")");
    r.add("algebra", lin.algebra.to_string(pr.vars));
    r.add("cocycle", lin.cocycle.to_string(pr.vars));
  } else {
    r.add("rank", "0");
    r.add("linear part of P", lin.lie->p.to_string(pr.vars));
    r.add("linear part of Q", lin.lie->q.to_string(pr.vars));
  }
  r.add("kronecker", rep.kronecker ? "yes" : "no");
  r.add("curvature", rep.curvature ? rep.curvature->to_string() : "-");
  r.add("verdict", to_string(rep.verdict));
  return 0;
}

int cmd_web(const Problem& pr, const Options& o, Report& r) {
  Web3 w = web(pr);
  BlaschkeCurvature bc = blaschke_curvature(w);
  const Vars& v = pr.vars;
  r.add("theta d" + v->name(0) + "^d" + v->name(1), bc.on_uv.to_string());
  r.add("theta df1^df2", bc.on_f1f2.to_string());
  r.add("verdict", bc.on_uv.is_zero() ? "HEXAGONAL" : "NON-HEXAGONAL");

  if (!numeric_requested(pr, o)) return 0;
  Point origin;
  if (!o.at.empty()) {
    origin = parse_point(o.at, 2);
  } else if (pr.doc.contains("origin")) {
    const auto& j = pr.doc.at("origin");
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].get<std::string>();
    origin = parse_point(s, 2);
  } else {
    throw InputError("hexagon check needs --at or an origin in the file");
  }
  double lo = 1e-3, hi = 1e-1;
  std::size_t n = 7;
  if (pr.doc.contains("ladder")) {
    const auto& l = pr.doc.at("ladder");
    lo = l.value("lo", lo);
    hi = l.value("hi", hi);
    n = l.value("n", n);
  }
  std::vector<double> ladder = geometric_ladder(lo, hi, n);
  Vec2 o2{origin[0].get_d(), origin[1].get_d()};
  HexagonFit fit = hexagon_trace(NumericWeb::from(w), o2, ladder);
  double kappa = blaschke_kappa(w, o2);
  r.add("origin", point_text(origin));
  r.add("defect exponent", sci(fit.exponent));
  r.add("kappa predicted", sci(kappa));
  r.add("kappa fitted", sci(fit.kappa_hat));
  if (bc.on_uv.is_zero()) {
    double worst = 0.0;
    for (double d : fit.defect) worst = std::max(worst, std::abs(d));
    r.add("max defect", sci(worst));
  }
  return 0;
}

int cmd_reduce_check(const Problem& pr, Report& r) {
  Pencil pen = pencil(pr);
  std::vector<std::array<double, 3>> samples;
  for (const auto& p : points(pr)) samples.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
  ReductionReport rep = reduction_crosscheck(pen, casimirs(pr), samples);
  for (const auto& c : rep.casimirs.checks) r.add(c.name, check_text(c));
  r.add("fiber axis", pr.vars->name(rep.fiber_axis));
  r.add("pullback", rep.pullback.to_string());
  r.add("formula", rep.formula.to_string());
  r.add("samples", std::to_string(rep.samples_used));
  r.add("max deviation", sci(rep.max_deviation));
  r.add("match", rep.exact_match ? "exact" : "MISMATCH");
  return rep.exact_match ? 0 : 1;
}

int cmd_connection_check(const Problem& pr, const Options& o, Report& r) {
  Gauge gauge;
  if (o.gauge == "default") {
    gauge = Gauge::canonical;
  } else if (o.gauge == "alt") {
    gauge = Gauge::alternate;
  } else {
    throw InputError("--gauge must be default or alt");
  }
  Pencil pen = pencil(pr);
  TheoremReport t = verify_theorem(pen, frame(pr), gauge);
  bool ok = t.equal;
  for (const auto& c : t.frame.checks) r.add(c.name, check_text(c));
  const FrameDecomposition& d = *t.frame.decomposition;
  r.add("a", d.a.to_string());
  r.add("b", d.b.to_string());
  r.add("c", d.c.to_string());
  r.add("u", d.u.to_string());
  r.add("v", d.v.to_string());
  r.add("w", d.w.to_string());
  r.add("gauge", o.gauge);
  const char* frame_names[3] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < 3; ++i) r.add(std::string("alpha(") + frame_names[i] + ")", t.connection.alpha[i].to_string());
  for (std::size_t i = 0; i < 3; ++i) r.add(std::string("beta(") + frame_names[i] + ")", t.connection.beta[i].to_string());
  for (std::size_t i = 0; i < 3; ++i) r.add(std::string("gamma(") + frame_names[i] + ")", t.connection.gamma[i].to_string());
  for (const auto& c : t.chart) {
    r.add(c.name, check_text(c));
    ok = ok && c.passed;
  }
  r.add("convention", ricci_convention);
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t c = 0; c < 3; ++c) {
      r.add(std::string("ric(") + frame_names[b] + "," + frame_names[c] + ")", t.ricci.ric[b][c].to_string());
    }
  }
  r.add("alt ric", t.ricci.alt.to_string());
  r.add("-4 alt ric", t.predicted.to_string());
  r.add("curvature", t.curvature.to_string());
  r.add("theorem", t.equal ? "holds" : "FAILS");
  return ok ? 0 : 1;
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
  if (f == Format::text) {
    for (const auto& [k, v] : r.fields) out << k << ": " << v << "\n";
    return;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) j[k] = v;
  out << j.dump(2) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of Poisson pencils on 3-manifolds", "ppk"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "problem file (JSON)")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* check = app.add_subcommand("check", "verify Jacobi, compatibility, cocycle and frame identities");
  add_common(check);
  auto* curv = app.add_subcommand("curvature", "curvature form and flatness verdict");
  add_common(curv);
  curv->add_option("--at", o.at, "evaluation point x,y,z (rational literals)");
  curv->add_flag("--numeric-check", o.numeric_check, "compare with the finite-difference oracle");
  auto* step_opt = curv->add_option("--step", o.step, "finite-difference step");
  auto* lin = app.add_subcommand("linearize", "linearize at a singular point");
  add_common(lin);
  lin->add_option("--at", o.at, "singular point x,y,z");
  auto* webc = app.add_subcommand("web-curvature", "Blaschke curvature and hexagon defect of a planar 3-web");
  add_common(webc);
  webc->add_option("--at", o.at, "hexagon origin u,v");
  webc->add_flag("--numeric-check", o.numeric_check, "trace hexagons and fit the defect");
  auto* red = app.add_subcommand("reduce-check", "compare the web pullback with the curvature formula");
  add_common(red);
  auto* con = app.add_subcommand("connection-check", "compare -4 Alt Ric with the curvature formula");
  add_common(con);
  con->add_option("--gauge", o.gauge, "default or alt")->check(CLI::IsMember({"default", "alt"}));

  std::vector<const char*> argv{"ppk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  o.step_given = step_opt->count() > 0;
  Format fmt = o.format == "json" ? Format::json : Format::text;

  Report r;
  int status = 0;
  try {
    Problem pr = load_problem(o.file);
    if (*check) {
      status = cmd_check(pr, r);
    } else if (*curv) {
      status = cmd_curvature(pr, o, r);
    } else if (*lin) {
      status = cmd_linearize(pr, o, r);
    } else if (*webc) {
      status = cmd_web(pr, o, r);
    } else if (*red) {
      status = cmd_reduce_check(pr, r);
    } else {
      status = cmd_connection_check(pr, o, r);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    render(r, fmt, out);
    err << "error: " << e.what() << "\n";
    return 1;
  }
  render(r, fmt, out);
  return status;
}

}  // namespace ppk::cli
