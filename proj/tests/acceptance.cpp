// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ppk/connection.hpp"
#include "ppk/error.hpp"
#include "ppk/web.hpp"
#include "problem.hpp"
#include "support.hpp"

using namespace ppk;
using testing::ex;
using testing::tensor;
using testing::xyz;

namespace {

constexpr double golden_seconds = 1.0;
constexpr double numeric_tolerance = 1e-6;
constexpr double exponent_target = 3.0;
constexpr double exponent_tolerance = 0.2;
constexpr double kappa_relative_tolerance = 0.10;
constexpr double web_seconds = 10.0;
constexpr int min_route_pencils = 8;
constexpr int gl2_pairs = 20;
constexpr int points_per_pencil = 10;
constexpr int min_property_cases = 200;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      detail << "failed: " << what;
      passed = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RVec3 v(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

LieStructure family(const Rational& a) { return LieStructure::from_brackets(v(0, 0, 0), {0, -a, 0}, v(1, 0, 0)); }

cli::Problem fixture(const char* name) { return cli::load_problem(testing::fixtures_dir() / name); }

Pencil example_pencil() { return cli::pencil(fixture("example_pencil.json")); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void golden(Outcome& o) {
  double worst = 0.0;
  auto timed = [&](const std::function<bool()>& f, const std::string& what) {
    auto t0 = Clock::now();
    bool ok = f();
    double s = since(t0);
    worst = std::max(worst, s);
    o.require(ok, what);
    o.require(s < golden_seconds, what + " took " + sci(s) + " s");
  };

  timed([] {
    Pencil p = cli::pencil(fixture("example_lie_pencil.json"));
    return curvature(p) == TwoForm(ex("-4/(x+y)^2"), RatExpr(xyz()), RatExpr(xyz()));
  }, "Example Lie pencil");

  LieStructure y_alg = LieStructure::from_brackets(v(0, 1, 0), v(0, 0, 0), v(0, 0, 0));
  std::vector<std::pair<Rational, Rational>> as{{1, 2}, {Rational(-3, 4), 5}, {7, Rational(-1, 3)}};
  for (const auto& [axy, axz] : as) {
    timed([&, axy = axy, axz = axz] {
      TwoForm expected(RatExpr(xyz()), RatExpr(xyz(), 2 * axy / axz) / ex("y^2"), RatExpr(xyz()));
      return curvature(linear_pencil(y_alg, Cocycle{axy, 0, -axz}, xyz())) == expected;
    }, "[x,y]=y with A(x,y)=" + axy.get_str() + ", A(x,z)=" + axz.get_str());
  }

  std::vector<RVec3> xis{v(1, 1, 0), {Rational(2, 3), Rational(-5, 2), 1}, {0, Rational(3, 7), 2}};
  for (int ai : {2, 3, -1, 1}) {
    Rational a = ai;
    for (const RVec3& xi : xis) {
      timed([&] {
        RatExpr lin = ex("x").scaled(xi[1]) - ex("y").scaled(xi[0]);
        RatExpr c = RatExpr(xyz(), 2 * (1 - a * a) * xi[0] * xi[1]) / (lin * lin).scaled(a);
        TwoForm got = curvature(linear_pencil(family(a), frozen_argument(family(a), xi), xyz()));
        bool zero_expected = a * a == 1 || xi[0] == 0;
        return got == TwoForm(c, RatExpr(xyz()), RatExpr(xyz())) && (!zero_expected || got.is_zero());
      }, "family a=" + a.get_str());
    }
  }
  o.detail << "17 identities, slowest " << sci(worst) << " s";
}

void semisimple(Outcome& o) {
  testing::Random rng(101);
  auto algebras = testing::model_algebras();
  int zero = 0;
  for (std::size_t k : {0u, 1u}) {
    for (int n = 0; n < 5; ++n) {
      Cocycle c{rng.nonzero_rational(), rng.nonzero_rational(), rng.nonzero_rational()};
      bool ok = curvature(linear_pencil(algebras[k], c, xyz())).is_zero();
      o.require(ok, (k == 0 ? "so(3) " : "sl(2) ") + c.to_string(xyz()));
      zero += ok;
    }
  }
  o.detail << zero << "/10 zero";
}

void routes(Outcome& o) {
  int count = 0;
  auto linear = [&](const char* name) {
    cli::Problem pr = fixture(name);
    LieStructure g = cli::structure(pr, "brackets");
    Cocycle a = cli::cocycle(pr, g);
    o.require(linear_pencil_curvature(g, a, xyz()) == curvature(cli::pencil(pr)), name);
    ++count;
  };
  for (const char* f : {"family_a2.json", "family_a1.json", "bracket_y_cocycle.json", "so3.json"}) linear(f);

  cli::Problem lie = fixture("example_lie_pencil.json");
  o.require(lie_pencil_curvature(cli::lie_def(lie), xyz()) == curvature(cli::pencil(lie)), "example_lie_pencil.json");
  ++count;

  // The plain tensor fixtures are Lie pencils too; read their linear parts.
  for (const char* name : {"example_pencil.json", "reduction_a1.json", "connection_a2.json"}) {
    Pencil p = cli::pencil(fixture(name));
    Linearization lin = linearize(p, {0, 0, 0});
    if (lin.lie) {
      o.require(lie_pencil_curvature(*lin.lie, xyz()) == curvature(p), name);
    } else {
      o.require(linear_pencil_curvature(lin.algebra, lin.cocycle, xyz()) == curvature(p), name);
    }
    ++count;
  }

  for (int a : {3, -1, 5}) {
    LieStructure g = family(a);
    Cocycle c = frozen_argument(g, v(1, 2, 0));
    o.require(linear_pencil_curvature(g, c, xyz()) == curvature(linear_pencil(g, c, xyz())), "family a=" + std::to_string(a));
    ++count;
  }
  o.require(count >= min_route_pencils, "too few pencils");
  o.detail << count << " pencils agree";
}

void gl2(Outcome& o) {
  testing::Random rng(202);
  auto algebras = testing::model_algebras();
  int done = 0, curved = 0;
  std::vector<Pencil> pool{example_pencil()};
  while (static_cast<int>(pool.size()) < gl2_pairs) {
    LieStructure g = algebras[static_cast<std::size_t>(rng.integer(0, 5))].in_basis(rng.invertible());
    Cocycle a = frozen_argument(g, rng.vec());
    if (a.is_zero()) continue;
    Pencil p = linear_pencil(g, a, xyz());
    if (is_generically_kronecker(p)) pool.push_back(p);
  }
  for (const Pencil& p : pool) {
    Matrix2 m;
    do m = {rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    while (m.det() == 0);
    TwoForm before = curvature(p);
    o.require(curvature(gl2_transform(p, m)) == before, "pair " + std::to_string(done));
    curved += !before.is_zero();
    ++done;
  }
  o.detail << done << " pairs unchanged (" << curved << " non-flat)";
}

void numeric(Outcome& o) {
  testing::Random rng(303);
  std::vector<Pencil> golden{example_pencil(), cli::pencil(fixture("family_a2.json")),
                             cli::pencil(fixture("bracket_y_cocycle.json")), cli::pencil(fixture("so3.json"))};
  double worst = 0.0;
  int points = 0;
  for (const Pencil& p : golden) {
    TwoForm exact = curvature(p);
    NumericPencil np = NumericPencil::from(p);
    int used = 0;
    while (used < points_per_pencil) {
      Point at{rng.rational(3, 5), rng.rational(3, 5), rng.rational(3, 5)};
      bool tame = true;
      for (std::size_t k = 0; k < 3; ++k) {
        RatExpr d = delta(p, k);
        if (!d.is_zero() && abs(d.eval(at)) < Rational(1, 4)) tame = false;
      }
      if (!tame) continue;
      auto fd = curvature_numeric(np, {at[0].get_d(), at[1].get_d(), at[2].get_d()});
      std::array<double, 3> ex_val{exact.xy.eval(at).get_d(), exact.yz.eval(at).get_d(), exact.zx.eval(at).get_d()};
      for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(fd[i] - ex_val[i]));
      ++used;
      ++points;
    }
  }
  o.require(worst <= numeric_tolerance, "max deviation " + sci(worst));
  o.detail << points << " points, max deviation " << sci(worst);
}

void linearization(Outcome& o) {
  Pencil p = cli::pencil(fixture("example_lie_pencil.json"));
  ObstructionReport a = flatness_obstruction_report(p, {1, -1, 0});
  o.require(a.kronecker, "(1,-1,0) Kronecker");
  o.require(a.curvature && !a.curvature->is_zero(), "(1,-1,0) non-flat");
  o.require(to_string(a.verdict) == "not flat", "(1,-1,0) verdict");
  ObstructionReport b = flatness_obstruction_report(p, {0, 1, 0});
  o.require(b.curvature && b.curvature->is_zero(), "(0,1,0) flat");
  o.require(to_string(b.verdict) == "inconclusive", "(0,1,0) verdict");
  o.detail << "(1,-1,0): " << to_string(a.verdict) << ", (0,1,0): " << to_string(b.verdict);
}

void webs(Outcome& o) {
  auto t0 = Clock::now();
  Web3 trivial = cli::web(fixture("web_trivial.json"));
  Web3 mult = cli::web(fixture("web_multiplicative.json"));
  cli::Problem curved_pr = fixture("web_curved.json");
  Web3 curved = cli::web(curved_pr);
  o.require(blaschke_curvature(trivial).on_uv.is_zero(), "trivial web theta = 0");
  o.require(blaschke_curvature(mult).on_uv.is_zero(), "multiplicative web theta = 0");
  o.require(!blaschke_curvature(curved).on_uv.is_zero(), "curved web theta != 0");

  const auto& origin_doc = curved_pr.doc.at("origin");
  Vec2 origin{parse_rational(origin_doc[0].get<std::string>()).get_d(),
              parse_rational(origin_doc[1].get<std::string>()).get_d()};
  std::vector<double> ladder = geometric_ladder(1e-3, 1e-1, 7);
  HexagonFit fit = hexagon_trace(NumericWeb::from(curved), origin, ladder);
  double kappa = blaschke_kappa(curved, origin);
  double rel = std::abs(fit.kappa_hat - kappa) / std::abs(kappa);
  double s = since(t0);
  o.require(std::abs(fit.exponent - exponent_target) <= exponent_tolerance, "exponent " + sci(fit.exponent));
  o.require(rel <= kappa_relative_tolerance, "kappa relative error " + sci(rel));
  o.require(s < web_seconds, "runtime " + sci(s) + " s");
  o.detail << "exponent " << sci(fit.exponent) << ", kappa fitted " << sci(fit.kappa_hat) << " vs " << sci(kappa)
           << ", " << sci(s) << " s";
}

void reduction(Outcome& o) {
  for (const char* name : {"reduction_a1.json", "reduction_example.json"}) {
    cli::Problem pr = fixture(name);
    std::vector<std::array<double, 3>> samples;
    for (const Point& p : cli::points(pr)) samples.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
    ReductionReport r = reduction_crosscheck(cli::pencil(pr), cli::casimirs(pr), samples);
    o.require(r.casimirs.ok(), std::string(name) + " Casimirs");
    bool ok = r.exact_match || r.max_deviation <= numeric_tolerance;
    if (!ok) {
      std::string rel = r.pullback == r.formula.scaled(-1) ? " (pullback = -formula exactly)" : "";
      o.require(false, std::string(name) + ": pullback " + r.pullback.to_string() + " vs formula " +
                           r.formula.to_string() + rel);
    }
    if (o.passed) o.detail << name << (r.exact_match ? " exact; " : " numeric; ");
  }
}

void theorem(Outcome& o) {
  int count = 0;
  for (const char* name : {"connection_example.json", "connection_a2.json"}) {
    cli::Problem pr = fixture(name);
    Pencil p = cli::pencil(pr);
    Frame f = cli::frame(pr);
    TheoremReport c = verify_theorem(p, f, Gauge::canonical);
    TheoremReport a = verify_theorem(p, f, Gauge::alternate);
    o.require(c.equal && a.equal, std::string(name) + " -4 Alt Ric = curvature");
    o.require(c.ricci.alt == a.ricci.alt, std::string(name) + " Alt Ric gauge-independent");
    o.require(c.ricci.ric != a.ricci.ric, std::string(name) + " Ric differs between gauges");
    ++count;
  }
  o.detail << count << " fixtures, both gauges";
}

void properties(Outcome& o) {
  testing::Random rng(404);
  auto algebras = testing::model_algebras();
  int cases = 0;
  for (int n = 0; n < 35; ++n, ++cases) {
    RatExpr a = rng.ratexpr(xyz(), 2, 2), b = rng.ratexpr(xyz(), 2, 2), c = rng.ratexpr(xyz(), 2, 2);
    o.require(a + b == b + a && a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c), "field laws");
  }
  for (int n = 0; n < 35; ++n, ++cases) {
    RatExpr a = rng.ratexpr(xyz(), 2, 2), b = rng.ratexpr(xyz(), 2, 2);
    std::size_t i = static_cast<std::size_t>(rng.integer(0, 2)), j = static_cast<std::size_t>(rng.integer(0, 2));
    o.require((a * b).diff(i) == a.diff(i) * b + a * b.diff(i) && a.diff(i).diff(j) == a.diff(j).diff(i),
              "Leibniz/Schwarz");
  }
  for (int n = 0; n < 35; ++n, ++cases) {
    PoissonTensor p(RatExpr(rng.poly(xyz(), 2, 2)), RatExpr(rng.poly(xyz(), 2, 2)), RatExpr(rng.poly(xyz(), 2, 2)));
    RatExpr f = rng.ratexpr(xyz(), 2, 2), g = rng.ratexpr(xyz(), 2, 2), h = rng.ratexpr(xyz(), 2, 2);
    Rational s = rng.rational();
    o.require(bracket(p, f, g) == -bracket(p, g, f) &&
                  bracket(p, f.scaled(s) + h, g) == bracket(p, f, g).scaled(s) + bracket(p, h, g) &&
                  bracket(p, f * g, h) == f * bracket(p, g, h) + g * bracket(p, f, h),
              "bracket laws");
  }
  for (int n = 0; n < 35; ++n, ++cases) {
    LieStructure g = algebras[static_cast<std::size_t>(n) % algebras.size()].in_basis(rng.invertible());
    o.require(jacobiator(lie_poisson(g, xyz())).vanishes(), "Lie-Poisson Jacobi");
  }
  for (int n = 0; n < 35; ++n, ++cases) {
    LieStructure g = algebras[static_cast<std::size_t>(n) % algebras.size()].in_basis(rng.invertible());
    RVec3 xi = rng.vec(), u = rng.vec(), w = rng.vec();
    Cocycle a = frozen_argument(g, xi);
    RVec3 uw = g.bracket(u, w);
    o.require(is_cocycle(g, a) && a(u, w) == xi[0] * uw[0] + xi[1] * uw[1] + xi[2] * uw[2], "frozen-argument cocycle");
  }
  for (int n = 0; n < 35; ++n, ++cases) {
    RatExpr a = rng.ratexpr(xyz(), 3, 3);
    o.require(parse(a.to_string(), xyz()) == a, "print/parse round-trip");
  }
  o.require(cases >= min_property_cases, "too few cases");
  o.detail << cases << " cases";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"golden formula reproduction", golden},
      {"semisimple flatness", semisimple},
      {"route consistency", routes},
      {"GL(2) invariance", gl2},
      {"numeric oracle", numeric},
      {"linearization verdicts", linearization},
      {"web module", webs},
      {"reduction cross-check", reduction},
      {"connection theorem", theorem},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << index << "] " << c.name << ": " << o.detail.str() << "\n";
    failed += !o.passed;
    ++index;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
