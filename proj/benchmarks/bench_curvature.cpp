#include <benchmark/benchmark.h>

#include "ppk/algebra.hpp"
#include "ppk/parser.hpp"
#include "ppk/web.hpp"

using namespace ppk;

namespace {

Vars xyz() {
  static Vars v = make_vars({"x", "y", "z"});
  return v;
}

RatExpr ex(const char* s) { return parse(s, xyz()); }

Pencil example() {
  return Pencil(PoissonTensor(ex("0"), ex("y"), ex("x")), PoissonTensor(ex("0"), ex("-(x+y)"), ex("0")));
}

// Linear pencil of [z,x] = x, [z,y] = a y with a frozen-argument cocycle.
LieStructure family(int a) {
  return LieStructure::from_brackets({0, 0, 0}, {0, Rational(-a), 0}, {1, 0, 0});
}

}  // namespace

static void ParseExpression(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ex("(x^2*y-3/4*z)/(x+y)^2 - (y*z+1)/(x-2*z)"));
}
BENCHMARK(ParseExpression);

static void Gcd(benchmark::State& state) {
  Poly c = ex("x*y-z^2+3").num();
  Poly a = c * ex("x^3+y*z-2").num();
  Poly b = c * ex("y^2*z+x-1").num();
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(Gcd);

static void CurvatureGeneral(benchmark::State& state) {
  Pencil p = example();
  for (auto _ : state) benchmark::DoNotOptimize(curvature(p));
}
BENCHMARK(CurvatureGeneral);

static void CurvatureLinearRoute(benchmark::State& state) {
  LieStructure g = family(static_cast<int>(state.range(0)));
  Cocycle a = frozen_argument(g, {1, 2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(linear_pencil_curvature(g, a, xyz()));
}
BENCHMARK(CurvatureLinearRoute)->Arg(2)->Arg(3)->Arg(7);

static void CurvatureGeneralOnLinear(benchmark::State& state) {
  LieStructure g = family(static_cast<int>(state.range(0)));
  Pencil p = linear_pencil(g, frozen_argument(g, {1, 2, 0}), xyz());
  for (auto _ : state) benchmark::DoNotOptimize(curvature(p));
}
BENCHMARK(CurvatureGeneralOnLinear)->Arg(2)->Arg(3)->Arg(7);

static void CurvatureNumeric(benchmark::State& state) {
  NumericPencil np = NumericPencil::from(example());
  for (auto _ : state) benchmark::DoNotOptimize(curvature_numeric(np, {2.0, -1.0 / 3, 5.0}));
}
BENCHMARK(CurvatureNumeric);

static void HexagonTrace(benchmark::State& state) {
  Vars uv = make_vars({"u", "v"});
  Web3 web{parse("u", uv), parse("v", uv), parse("u^2+u*v+v^2", uv)};
  NumericWeb nw = NumericWeb::from(web);
  std::vector<double> ladder = geometric_ladder(1e-3, 1e-1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hexagon_trace(nw, {1.0, 0.5}, ladder));
}
BENCHMARK(HexagonTrace)->Arg(4)->Arg(7)->Arg(12);

BENCHMARK_MAIN();
