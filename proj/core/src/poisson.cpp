#include "ppk/poisson.hpp"

#include "ppk/error.hpp"

namespace ppk {

namespace {

void require_three(const Vars& vars) {
  if (vars->size() != 3) throw InputError("Poisson tensors need exactly three variables");
}

}  // namespace

PoissonTensor::PoissonTensor(const Vars& vars) : xy(vars), yz(vars), zx(vars) {
  require_three(vars);
}

PoissonTensor::PoissonTensor(RatExpr xy_, RatExpr yz_, RatExpr zx_)
    : xy(std::move(xy_)), yz(std::move(yz_)), zx(std::move(zx_)) {
  require_three(xy.vars());
}

RatExpr PoissonTensor::component(std::size_t i, std::size_t j) const {
  if (i > 2 || j > 2) throw InputError("Poisson component index out of range");
  if (i == j) return RatExpr(vars());
  // (0,1) = xy, (1,2) = yz, (2,0) = zx; the transposes flip sign.
  if (i == 0 && j == 1) return xy;
  if (i == 1 && j == 2) return yz;
  if (i == 2 && j == 0) return zx;
  return -component(j, i);
}

PoissonTensor PoissonTensor::operator+(const PoissonTensor& o) const {
  return {xy + o.xy, yz + o.yz, zx + o.zx};
}

PoissonTensor PoissonTensor::operator-(const PoissonTensor& o) const {
  return {xy - o.xy, yz - o.yz, zx - o.zx};
}

PoissonTensor PoissonTensor::scaled(const Rational& c) const {
  return {xy.scaled(c), yz.scaled(c), zx.scaled(c)};
}

RatExpr bracket(const PoissonTensor& p, const RatExpr& f, const RatExpr& g) {
  std::array<RatExpr, 3> df{f.diff(0), f.diff(1), f.diff(2)};
  std::array<RatExpr, 3> dg{g.diff(0), g.diff(1), g.diff(2)};
  RatExpr sum(p.vars());
  // Each unordered pair once: P^{ij} (f_i g_j - f_j g_i).
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
  const std::array<const RatExpr*, 3> comps{&p.xy, &p.yz, &p.zx};
  for (std::size_t k = 0; k < 3; ++k) {
    if (comps[k]->is_zero()) continue;
    auto [i, j] = pairs[k];
    RatExpr minor = df[i] * dg[j] - df[j] * dg[i];
    if (!minor.is_zero()) sum += *comps[k] * minor;
  }
  return sum;
}

Jacobiator jacobiator(const PoissonTensor& p) {
  const Vars& vars = p.vars();
  RatExpr x = RatExpr::variable(vars, 0);
  RatExpr y = RatExpr::variable(vars, 1);
  RatExpr z = RatExpr::variable(vars, 2);
  Jacobiator j{RatExpr(vars), {bracket(p, x, p.yz), bracket(p, y, p.zx), bracket(p, z, p.xy)}};
  j.value = j.terms[0] + j.terms[1] + j.terms[2];
  return j;
}

bool is_poisson(const PoissonTensor& p) {
  return jacobiator(p).vanishes();
}

bool is_compatible(const PoissonTensor& p, const PoissonTensor& q) {
  if (!is_poisson(p)) throw MathError("first tensor fails the Jacobi identity");
  if (!is_poisson(q)) throw MathError("second tensor fails the Jacobi identity");
  return is_poisson(p + q);
}

VectorField sgrad(const PoissonTensor& p, const RatExpr& f) {
  const Vars& vars = p.vars();
  VectorField v{{RatExpr(vars), RatExpr(vars), RatExpr(vars)}};
  for (std::size_t i = 0; i < 3; ++i) v.v[i] = bracket(p, f, RatExpr::variable(vars, i));
  return v;
}

RatExpr divergence(const VectorField& v) {
  return v[0].diff(0) + v[1].diff(1) + v[2].diff(2);
}

}  // namespace ppk
