#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "ppk/error.hpp"
#include "ppk/web.hpp"
#include "support.hpp"

using namespace ppk;
using testing::ex;
using testing::tensor;
using testing::xyz;

namespace {

Vars uv() {
  static Vars v = make_vars({"u", "v"});
  return v;
}

RatExpr w(const char* s) { return parse(s, uv()); }

Web3 web(const char* f1, const char* f2, const char* f3) { return {w(f1), w(f2), w(f3)}; }

// 2 d_u d_v log(f3_v / f3_u) for webs whose first two families are u and v.
RatExpr graph_oracle(const RatExpr& f3) {
  RatExpr ratio = f3.diff(1) / f3.diff(0);
  RatExpr dlog_v = ratio.diff(1) / ratio;
  return dlog_v.diff(0).scaled(2);
}

// t -> 2t, t -> t + 1, t -> t^3.
RatExpr reparam(const RatExpr& f, int kind) {
  switch (kind) {
    case 0: return f.scaled(2);
    case 1: return f + RatExpr(f.vars(), 1);
    default: return f.pow(3);
  }
}

std::vector<Point> samples() {
  return {{1, 2, 0}, {2, Rational(-1, 3), 5}, {Rational(-3, 2), Rational(1, 2), 1}, {Rational(1, 2), 3, -2},
          {3, 5, Rational(1, 7)}};
}

std::vector<std::array<double, 3>> numeric(const std::vector<Point>& pts) {
  std::vector<std::array<double, 3>> out;
  for (const auto& p : pts) out.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
  return out;
}

}  // namespace

TEST_CASE("hexagonal webs have zero Blaschke curvature") {
  CHECK(blaschke_curvature(web("u", "v", "u+v")).on_uv.is_zero());
  CHECK(blaschke_curvature(web("u", "v", "u*v")).on_uv.is_zero());
  CHECK(blaschke_curvature(web("u", "v", "u^2+v")).on_uv.is_zero());
  CHECK(blaschke_curvature(web("u+v", "u-v", "u")).on_uv.is_zero());
}

TEST_CASE("Blaschke curvature of graph webs matches the log-derivative oracle") {
  for (const char* f3 : {"u^2+u*v+v^2", "u*v+u^3", "u^2*v+v^3+u", "(u+v)/(1+u*v)"}) {
    RatExpr oracle = graph_oracle(w(f3));
    BlaschkeCurvature b = blaschke_curvature(web("u", "v", f3));
    CHECK(b.on_uv == oracle);
    CHECK(b.on_f1f2 == oracle);
  }
  CHECK(blaschke_curvature(web("u", "v", "u^2+u*v+v^2")).on_uv == w("(-3*u^2+3*v^2)/(u^2+5/2*u*v+v^2)^2"));
}

TEST_CASE("Blaschke curvature is invariant under renumbering and reparametrization") {
  std::vector<Web3> webs{web("u", "v", "u^2+u*v+v^2"), web("u", "v", "u*v+u^3"), web("u+v^2", "v", "u*v")};
  for (const Web3& base : webs) {
    RatExpr theta = blaschke_curvature(base).on_uv;
    REQUIRE_FALSE(theta.is_zero());
    std::array<RatExpr, 3> f{base.f1, base.f2, base.f3};
    std::array<int, 3> perm{0, 1, 2};
    do {
      CHECK(blaschke_curvature({f[perm[0]], f[perm[1]], f[perm[2]]}).on_uv == theta);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int kind = 0; kind < 3; ++kind) {
      for (std::size_t i = 0; i < 3; ++i) {
        std::array<RatExpr, 3> g = f;
        g[i] = reparam(g[i], kind);
        CHECK(blaschke_curvature({g[0], g[1], g[2]}).on_uv == theta);
      }
    }
  }
}

TEST_CASE("degenerate webs are rejected") {
  CHECK_THROWS_AS(blaschke_curvature(web("u", "2*u", "v")), MathError);
  CHECK_THROWS_AS(blaschke_curvature(web("u", "v", "u")), MathError);
}

TEST_CASE("hexagon defect of a curved web is cubic with the predicted constant") {
  auto start = std::chrono::steady_clock::now();
  Web3 curved = web("u", "v", "u^2+u*v+v^2");
  NumericWeb nw = NumericWeb::from(curved);
  std::vector<double> ladder = geometric_ladder(1e-3, 1e-1, 7);
  for (Vec2 origin : {Vec2{1.0, 0.5}, Vec2{0.3, 1.2}}) {
    HexagonFit fit = hexagon_trace(nw, origin, ladder);
    CHECK(fit.exponent == doctest::Approx(3.0).epsilon(0.2 / 3.0));
    double kappa = blaschke_kappa(curved, origin);
    CHECK(std::abs(fit.kappa_hat - kappa) <= 0.1 * std::abs(kappa));
  }
  Web3 cubic = web("u", "v", "u*v+u^3");
  HexagonFit fit = hexagon_trace(NumericWeb::from(cubic), {0.8, 0.4}, ladder);
  CHECK(std::abs(fit.exponent - 3.0) <= 0.2);
  double kappa = blaschke_kappa(cubic, Vec2{0.8, 0.4});
  CHECK(std::abs(fit.kappa_hat - kappa) <= 0.1 * std::abs(kappa));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 10.0);
}

TEST_CASE("hexagons close on hexagonal webs") {
  std::vector<double> ladder = geometric_ladder(1e-3, 1e-1, 5);
  for (const Web3& flat : {web("u", "v", "u+v"), web("u", "v", "u*v")}) {
    HexagonFit fit = hexagon_trace(NumericWeb::from(flat), {1.0, 0.5}, ladder);
    for (double d : fit.defect) CHECK(std::abs(d) < 1e-9);
  }
}

TEST_CASE("hexagon polygon vertices lie on the prescribed leaves") {
  Web3 curved = web("u", "v", "u^2+u*v+v^2");
  NumericWeb nw = NumericWeb::from(curved);
  HexagonPolygon h = hexagon_polygon(nw, {1.0, 0.5}, 0.05);
  auto f = [&](std::size_t k, const Vec2& p) { return nw.f[k](p); };
  // A on the family-1 leaf through O, B shares f2 with A, C shares f1 with B, ...
  CHECK(f(0, h.vertices[0]) == doctest::Approx(1.0));
  CHECK(f(1, h.vertices[1]) == doctest::Approx(f(1, h.vertices[0])));
  CHECK(f(2, h.vertices[1]) == doctest::Approx(f(2, Vec2{1.0, 0.5})));
  CHECK(f(0, h.vertices[2]) == doctest::Approx(f(0, h.vertices[1])));
  CHECK(f(2, h.vertices[6]) - f(2, h.vertices[0]) == doctest::Approx(h.defect));
}

TEST_CASE("Casimir verification") {
  Pencil p(tensor("0", "y", "x"), tensor("0", "-(x+y)", "0"));
  auto pts = samples();
  CasimirReport good = verify_casimirs(p, {ex("x*y"), ex("x"), ex("y-x")}, pts);
  CHECK(good.ok());
  CHECK(good.checks.size() == 5);
  CasimirReport wrong_h = verify_casimirs(p, {ex("x*y"), ex("x"), ex("y+x")}, pts);
  CHECK_FALSE(wrong_h.ok());
  CHECK_FALSE(wrong_h.checks[2].passed);
  CHECK(wrong_h.checks[2].name == "casimir h of P+Q");
  CasimirReport dependent = verify_casimirs(p, {ex("x*y"), ex("x"), ex("x^2")}, pts);
  CHECK_FALSE(dependent.ok());
}

TEST_CASE("reduction of a flat pencil matches exactly") {
  Pencil p(tensor("0", "-y", "x"), tensor("0", "-1", "1"));
  CasimirTriple c{ex("y/x"), ex("y-x"), ex("(y+1)/(x+1)")};
  auto pts = samples();
  REQUIRE(verify_casimirs(p, c, pts).ok());
  ReductionReport r = reduction_crosscheck(p, c, numeric(pts));
  CHECK(r.casimirs.ok());
  CHECK(r.exact_match);
  CHECK(r.pullback.is_zero());
  CHECK(r.formula.is_zero());
  CHECK(r.max_deviation == 0.0);
}

TEST_CASE("reduction of the non-flat example: pullback is the negated formula") {
  // Measured: the Blaschke form of the reduced web, pulled back along (f, g),
  // comes out as +4/(x+y)^2 while the formula gives -4/(x+y)^2. Swapping P and
  // Q, or rescaling the pencil, does not change that.
  PoissonTensor pt = tensor("0", "y", "x"), qt = tensor("0", "-(x+y)", "0");
  std::vector<std::pair<Pencil, CasimirTriple>> numberings{
      {Pencil(pt, qt), {ex("x*y"), ex("x"), ex("y-x")}},
      {Pencil(qt, pt), {ex("x"), ex("x*y"), ex("y-x")}},
      {Pencil(pt.scaled(2), qt.scaled(2)), {ex("x*y"), ex("x"), ex("y-x")}},
  };
  auto pts = samples();
  for (const auto& [p, c] : numberings) {
    ReductionReport r = reduction_crosscheck(p, c, numeric(pts));
    CHECK(r.casimirs.ok());
    CHECK_FALSE(r.exact_match);
    CHECK(r.pullback == r.formula.scaled(-1));
    CHECK(r.pullback.xy == ex("4/(x+y)^2"));
  }
}
