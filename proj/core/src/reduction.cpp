#include <cmath>
#include <sstream>

#include "blaschke.hpp"
#include "ppk/error.hpp"
#include "ppk/web.hpp"

namespace ppk {

namespace {

using Grad = std::array<RatExpr, 3>;

Grad gradient(const RatExpr& f) { return {f.diff(0), f.diff(1), f.diff(2)}; }

Grad cross(const Grad& a, const Grad& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatExpr along(const Grad& field, const RatExpr& e) {
  return field[0] * e.diff(0) + field[1] * e.diff(1) + field[2] * e.diff(2);
}

Check casimir_check(const char* name, const PoissonTensor& t, const RatExpr& f) {
  Check c{name, true, ""};
  const char* axes = "xyz";
  for (std::size_t i = 0; i < 3; ++i) {
    RatExpr b = bracket(t, f, RatExpr::variable(f.vars(), i));
    if (!b.is_zero()) {
      c.passed = false;
      c.detail = std::string("{.,") + axes[i] + "} = " + b.to_string();
      break;
    }
  }
  return c;
}

bool independent_at(const Grad& a, const Grad& b, const Point& at) {
  std::array<Rational, 3> u, v;
  for (std::size_t i = 0; i < 3; ++i) {
    u[i] = a[i].eval(at);
    v[i] = b[i].eval(at);
  }
  return u[1] * v[2] != u[2] * v[1] || u[2] * v[0] != u[0] * v[2] || u[0] * v[1] != u[1] * v[0];
}

}  // namespace

bool CasimirReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CasimirReport verify_casimirs(const Pencil& pencil, const CasimirTriple& c, std::span<const Point> samples) {
  CasimirReport r;
  r.checks.push_back(casimir_check("casimir f of P", pencil.p(), c.f));
  r.checks.push_back(casimir_check("casimir g of Q", pencil.q(), c.g));
  r.checks.push_back(casimir_check("casimir h of P+Q", pencil.p() + pencil.q(), c.h));

  Grad df = gradient(c.f), dg = gradient(c.g), dh = gradient(c.h);
  Check indep{"pairwise independence", true, ""};
  for (const auto& pt : samples) {
    try {
      if (!independent_at(df, dg, pt) || !independent_at(dg, dh, pt) || !independent_at(df, dh, pt)) {
        indep.passed = false;
      }
    } catch (const PoleError&) {
      indep.passed = false;
    }
    if (!indep.passed) {
      std::ostringstream os;
      os << "dependent differentials at (";
      for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i].get_str();
      os << ")";
      indep.detail = os.str();
      break;
    }
  }
  r.checks.push_back(indep);

  Grad fg = cross(df, dg);
  RatExpr det = fg[0] * dh[0] + fg[1] * dh[1] + fg[2] * dh[2];
  Check dep{"functional dependence", det.is_zero(), det.is_zero() ? "" : "det = " + det.to_string()};
  r.checks.push_back(dep);
  return r;
}

ReductionReport reduction_crosscheck(const Pencil& pencil, const CasimirTriple& c,
                                     std::span<const std::array<double, 3>> numeric_samples) {
  ReductionReport r{.casimirs = {}, .fiber_axis = 2, .pullback = TwoForm(pencil.vars()), .formula = TwoForm(pencil.vars())};
  std::vector<Point> exact_samples;
  for (const auto& s : numeric_samples) exact_samples.push_back({Rational(s[0]), Rational(s[1]), Rational(s[2])});
  r.casimirs = verify_casimirs(pencil, c, exact_samples);
  if (!r.casimirs.ok()) throw MathError("Casimir functions failed verification");

  Grad df = gradient(c.f), dg = gradient(c.g);
  Grad fg = cross(df, dg);
  // (f, g, x_w) is a chart wherever the w-component of df x dg is nonzero.
  const std::array<std::size_t, 3> order{2, 0, 1};
  std::size_t w = 3;
  for (std::size_t axis : order) {
    if (!fg[axis].is_zero()) {
      w = axis;
      break;
    }
  }
  if (w == 3) throw MathError("df and dg are everywhere dependent");
  r.fiber_axis = w;

  const Vars& vars = pencil.vars();
  Grad ew{RatExpr(vars), RatExpr(vars), RatExpr(vars)};
  ew[w] = RatExpr(vars, 1);
  const RatExpr& jac = fg[w];
  // Columns of the inverse Jacobian of (f, g, x_w): d/df and d/dg at fixed x_w.
  Grad e_f = cross(dg, ew), e_g = cross(ew, df);
  for (auto& comp : e_f) comp /= jac;
  for (auto& comp : e_g) comp /= jac;

  auto d1 = [&](const RatExpr& e) { return along(e_f, e); };
  auto d2 = [&](const RatExpr& e) { return along(e_g, e); };
  RatExpr k = detail::blaschke_coefficient(d1, d2, c.h);
  // k df ^ dg in the chart: (df ^ dg)_ij = f_i g_j - f_j g_i = (df x dg) components.
  r.pullback = TwoForm(k * fg[2], k * fg[0], k * fg[1]);
  r.formula = curvature(pencil);
  r.exact_match = r.pullback == r.formula;

  for (const auto& s : numeric_samples) {
    std::span<const double> at(s);
    try {
      double d = 0.0;
      d = std::max(d, std::abs(r.pullback.xy.eval(at) - r.formula.xy.eval(at)));
      d = std::max(d, std::abs(r.pullback.yz.eval(at) - r.formula.yz.eval(at)));
      d = std::max(d, std::abs(r.pullback.zx.eval(at) - r.formula.zx.eval(at)));
      r.max_deviation = std::max(r.max_deviation, d);
      ++r.samples_used;
    } catch (const PoleError&) {
    }
  }
  return r;
}

}  // namespace ppk
