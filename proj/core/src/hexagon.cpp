// Numeric hexagon construction on a planar 3-web.
//
// Each side of the polygon follows a level curve {f_j = c} from its start point
// until it meets the level set {f_k = t}. Tracing is predictor-corrector: an
// Euler step along the unit tangent, then Newton projection back onto the curve.
// Once the target function changes sign the crossing is located by bisection
// with secant steps, and finally polished by a 2x2 Newton solve.

#include <cmath>
#include <sstream>

#include "ppk/error.hpp"
#include "ppk/web.hpp"

namespace ppk {

namespace {

double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }
Vec2 axpy(const Vec2& p, double s, const Vec2& d) { return {p[0] + s * d[0], p[1] + s * d[1]}; }

class Tracer {
 public:
  Tracer(const NumericWeb& web, const HexagonOptions& options) : web_(web), opt_(options) {}

  // Point on {f_j = f_j(start)} where f_k = target.
  Vec2 intersect(const Vec2& start, std::size_t j, std::size_t k, double target) const {
    const double level = web_.f[j](start);
    auto g = [&](const Vec2& p) { return web_.f[k](p) - target; };

    Vec2 p = start;
    double gp = g(p);
    if (std::abs(gp) <= opt_.tolerance) return polish(p, j, level, k, target);

    Vec2 previous{0.0, 0.0};
    for (int iter = 0; iter < 10000; ++iter) {
      Vec2 tau = tangent(p, j);
      double slope = dot(web_.grad[k](p), tau);
      if (slope == 0.0) throw MathError("hexagon trace: level curves are tangent");
      // Orient so that moving along tau drives g toward zero.
      if ((gp > 0) == (slope > 0)) {
        tau = {-tau[0], -tau[1]};
        slope = -slope;
      }
      if (dot(tau, previous) < 0.0) {
        throw MathError("hexagon trace: level curve turns back before reaching the target");
      }
      previous = tau;
      double ds = std::min(opt_.max_step, 1.25 * std::abs(gp / slope));
      Vec2 q = correct(axpy(p, ds, tau), j, level);
      double gq = g(q);
      if (norm({q[0] - start[0], q[1] - start[1]}) > opt_.max_distance) {
        throw MathError("hexagon trace left the working region");
      }
      if ((gq > 0) != (gp > 0) || std::abs(gq) <= opt_.tolerance) {
        Vec2 root = bracket_root(p, tau, 0.0, gp, ds, gq, j, level, g);
        return polish(root, j, level, k, target);
      }
      p = q;
      gp = gq;
    }
    throw MathError("hexagon trace did not reach the target level set");
  }

 private:
  Vec2 tangent(const Vec2& p, std::size_t j) const {
    Vec2 gr = web_.grad[j](p);
    double n = norm(gr);
    if (n == 0.0) throw MathError("hexagon trace: critical point of a web function");
    return {-gr[1] / n, gr[0] / n};
  }

  Vec2 correct(Vec2 q, std::size_t j, double level) const {
    for (int i = 0; i < 50; ++i) {
      double r = web_.f[j](q) - level;
      Vec2 gr = web_.grad[j](q);
      double n2 = dot(gr, gr);
      if (n2 == 0.0) throw MathError("hexagon trace: critical point of a web function");
      q = axpy(q, -r / n2, gr);
      if (std::abs(r) <= 1e-15 * (1.0 + std::abs(level))) return q;
    }
    return q;
  }

  template <class G>
  Vec2 bracket_root(const Vec2& base, const Vec2& tau, double a, double ga, double b, double gb,
                    std::size_t j, double level, const G& g) const {
    Vec2 best = correct(axpy(base, b, tau), j, level);
    if (std::abs(gb) <= opt_.tolerance) return best;
    for (int iter = 0; iter < 200; ++iter) {
      // Secant candidate, fall back to bisection when it leaves the bracket.
      double s = b - gb * (b - a) / (gb - ga);
      if (!(s > std::min(a, b) && s < std::max(a, b)) || iter % 3 == 2) s = 0.5 * (a + b);
      Vec2 q = correct(axpy(base, s, tau), j, level);
      double gs = g(q);
      best = q;
      if (std::abs(gs) <= opt_.tolerance || std::abs(b - a) < 1e-15) return best;
      if ((gs > 0) == (ga > 0)) {
        a = s;
        ga = gs;
      } else {
        b = s;
        gb = gs;
      }
    }
    throw MathError("hexagon trace: root finder did not converge");
  }

  // Newton on (f_j - level, f_k - target).
  Vec2 polish(Vec2 p, std::size_t j, double level, std::size_t k, double target) const {
    for (int i = 0; i < 8; ++i) {
      double r1 = web_.f[j](p) - level;
      double r2 = web_.f[k](p) - target;
      Vec2 a = web_.grad[j](p);
      Vec2 b = web_.grad[k](p);
      double det = a[0] * b[1] - a[1] * b[0];
      if (det == 0.0) break;
      double du = (r1 * b[1] - r2 * a[1]) / det;
      double dv = (a[0] * r2 - b[0] * r1) / det;
      p = {p[0] - du, p[1] - dv};
      if (std::abs(du) + std::abs(dv) < 1e-17) break;
    }
    return p;
  }

  const NumericWeb& web_;
  HexagonOptions opt_;
};

}  // namespace

HexagonPolygon hexagon_polygon(const NumericWeb& web, const Vec2& origin, double eps,
                               const HexagonOptions& options) {
  Tracer t(web, options);
  const double o1 = web.f[0](origin);
  const double o2 = web.f[1](origin);
  const double o3 = web.f[2](origin);

  HexagonPolygon poly;
  auto& v = poly.vertices;
  v[0] = t.intersect(origin, 0, 2, o3 + eps);  // A on gamma_1
  v[1] = t.intersect(v[0], 1, 2, o3);          // B on gamma_3
  v[2] = t.intersect(v[1], 0, 1, o2);          // C on gamma_2
  v[3] = t.intersect(v[2], 2, 0, o1);          // D on gamma_1
  v[4] = t.intersect(v[3], 1, 2, o3);          // E on gamma_3
  v[5] = t.intersect(v[4], 0, 1, o2);          // F on gamma_2
  v[6] = t.intersect(v[5], 2, 0, o1);          // G on gamma_1
  poly.defect = web.f[2](v[6]) - web.f[2](v[0]);
  return poly;
}

HexagonFit hexagon_trace(const NumericWeb& web, const Vec2& origin, std::span<const double> eps_ladder,
                         const HexagonOptions& options) {
  if (eps_ladder.size() < 2) throw InputError("hexagon fit needs at least two eps values");
  HexagonFit fit;
  for (double e : eps_ladder) {
    fit.eps.push_back(e);
    fit.defect.push_back(hexagon_polygon(web, origin, e, options).defect);
  }
  // log|defect| = exponent * log eps + c
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < fit.eps.size(); ++i) {
    if (fit.defect[i] == 0.0) continue;
    double x = std::log(fit.eps[i]);
    double y = std::log(std::abs(fit.defect[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    double dn = static_cast<double>(n);
    fit.exponent = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  }
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < fit.eps.size(); ++i) {
    if (fit.eps[i] < fit.eps[smallest]) smallest = i;
  }
  fit.kappa_hat = fit.defect[smallest] / std::pow(fit.eps[smallest], 3);
  return fit;
}

}  // namespace ppk
