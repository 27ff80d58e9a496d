#include "ppk/web.hpp"

#include <cmath>

#include "blaschke.hpp"
#include "ppk/error.hpp"

namespace ppk {

namespace {

void require_plane(const Web3& web) {
  if (web.vars()->size() != 2) throw InputError("a planar web needs exactly two variables");
}

struct PlaneFields {
  // d/df1 = (e1u d/du + e1v d/dv), d/df2 likewise; jac = det d(f1,f2)/d(u,v).
  RatExpr e1u, e1v, e2u, e2v, jac;
};

PlaneFields coordinate_fields(const Web3& web) {
  RatExpr f1u = web.f1.diff(0), f1v = web.f1.diff(1);
  RatExpr f2u = web.f2.diff(0), f2v = web.f2.diff(1);
  RatExpr jac = f1u * f2v - f1v * f2u;
  if (jac.is_zero()) throw MathError("Jacobian of (f1, f2) is identically singular");
  return {f2v / jac, -f2u / jac, -f1v / jac, f1u / jac, jac};
}

}  // namespace

BlaschkeCurvature blaschke_curvature(const Web3& web) {
  require_plane(web);
  PlaneFields pf = coordinate_fields(web);
  auto d1 = [&](const RatExpr& e) { return pf.e1u * e.diff(0) + pf.e1v * e.diff(1); };
  auto d2 = [&](const RatExpr& e) { return pf.e2u * e.diff(0) + pf.e2v * e.diff(1); };
  RatExpr k = detail::blaschke_coefficient(d1, d2, web.f3);
  return {k, k * pf.jac};
}

double blaschke_kappa(const Web3& web, std::span<const double> at) {
  require_plane(web);
  PlaneFields pf = coordinate_fields(web);
  auto d1 = [&](const RatExpr& e) { return pf.e1u * e.diff(0) + pf.e1v * e.diff(1); };
  auto d2 = [&](const RatExpr& e) { return pf.e2u * e.diff(0) + pf.e2v * e.diff(1); };
  RatExpr k = detail::blaschke_coefficient(d1, d2, web.f3);
  // The defect law is normalized against theta with the factor 2 of the
  // formula above and the orientation of the A..G construction: -1/2.
  return -0.5 * k.eval(at) / (d1(web.f3).eval(at) * d2(web.f3).eval(at));
}

bool web_is_regular_at(const Web3& web, std::span<const Point> samples) {
  require_plane(web);
  const std::array<const RatExpr*, 3> fs{&web.f1, &web.f2, &web.f3};
  for (const auto& pt : samples) {
    std::array<std::array<Rational, 2>, 3> g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = {fs[i]->diff(0).eval(pt), fs[i]->diff(1).eval(pt)};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (g[i][0] * g[j][1] - g[i][1] * g[j][0] == 0) return false;
      }
    }
  }
  return true;
}

NumericWeb NumericWeb::from(const Web3& web) {
  require_plane(web);
  NumericWeb nw;
  const std::array<const RatExpr*, 3> fs{&web.f1, &web.f2, &web.f3};
  for (std::size_t i = 0; i < 3; ++i) {
    RatExpr f = *fs[i];
    RatExpr fu = f.diff(0);
    RatExpr fv = f.diff(1);
    nw.f[i] = [f](const Vec2& p) { return f.eval(std::span<const double>(p)); };
    nw.grad[i] = [fu, fv](const Vec2& p) {
      return Vec2{fu.eval(std::span<const double>(p)), fv.eval(std::span<const double>(p))};
    };
  }
  return nw;
}

std::vector<double> geometric_ladder(double lo, double hi, std::size_t n) {
  if (n < 2 || lo <= 0 || hi <= lo) throw InputError("bad ladder bounds");
  std::vector<double> out(n);
  const double ratio = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo * std::exp(ratio * static_cast<double>(i));
  out.back() = hi;
  return out;
}

}  // namespace ppk
