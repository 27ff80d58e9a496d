// Finite-difference oracle for the curvature form. Uses only point evaluations
// of the six bracket functions.

#include <cmath>
#include <sstream>

#include "ppk/error.hpp"
#include "ppk/pencil.hpp"

namespace ppk {

namespace {

using Vec3 = std::array<double, 3>;
using Fn = NumericPencil::Fn;

double component(const std::array<Fn, 3>& t, std::size_t i, std::size_t j, const Vec3& x) {
  if (i == j) return 0.0;
  if (i == 0 && j == 1) return t[0](x);
  if (i == 1 && j == 2) return t[1](x);
  if (i == 2 && j == 0) return t[2](x);
  return -component(t, j, i, x);
}

Vec3 shifted(Vec3 x, std::size_t axis, double by) {
  x[axis] += by;
  return x;
}

template <class F>
double central4(const F& f, const Vec3& x, std::size_t axis, double h) {
  return (-f(shifted(x, axis, 2 * h)) + 8 * f(shifted(x, axis, h)) - 8 * f(shifted(x, axis, -h)) +
          f(shifted(x, axis, -2 * h))) /
         (12 * h);
}

}  // namespace

std::array<double, 3> curvature_numeric(const NumericPencil& pencil, const Vec3& at,
                                        const NumericCurvatureOptions& options) {
  const double h = options.step;
  std::array<double, 3> by_axis{0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j] = cyclic_pair(k);
    auto delta = [&](const Vec3& x) {
      return component(pencil.p, k, i, x) * component(pencil.q, k, j, x) -
             component(pencil.q, k, i, x) * component(pencil.p, k, j, x);
    };
    double d0 = delta(at);
    if (std::abs(d0) < options.skip_threshold) continue;
    if (std::abs(d0) < options.singular_threshold) {
      std::ostringstream os;
      os << "near-singular Delta (" << d0 << ") for axis " << k;
      throw MathError(os.str());
    }
    auto div = [&](const std::array<Fn, 3>& t) {
      return [&, t_ptr = &t](const Vec3& x) {
        double s = 0.0;
        for (std::size_t m = 0; m < 3; ++m) {
          if (m == k) continue;
          s += central4([&](const Vec3& y) { return component(*t_ptr, k, m, y); }, x, m, h);
        }
        return s / delta(x);
      };
    };
    auto ratio_q = div(pencil.q);
    auto ratio_p = div(pencil.p);
    double sum = 0.0;
    for (std::size_t m = 0; m < 3; ++m) {
      if (m == k) continue;
      sum += component(pencil.p, k, m, at) * central4(ratio_q, at, m, h);
      sum -= component(pencil.q, k, m, at) * central4(ratio_p, at, m, h);
    }
    by_axis[k] = 2 * sum;
  }
  return {by_axis[2], by_axis[0], by_axis[1]};
}

}  // namespace ppk
