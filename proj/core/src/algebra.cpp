#include "ppk/algebra.hpp"

#include <sstream>

#include "ppk/error.hpp"

namespace ppk {

namespace {

RVec3 zero3() { return {Rational(0), Rational(0), Rational(0)}; }

RVec3 add(const RVec3& a, const RVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

RVec3 scale(const RVec3& a, const Rational& s) { return {a[0] * s, a[1] * s, a[2] * s}; }

RVec3 basis(std::size_t i) {
  RVec3 e = zero3();
  e[i] = 1;
  return e;
}

Rational det3(const RMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RMat3 inverse3(const RMat3& m) {
  Rational d = det3(m);
  if (d == 0) throw MathError("singular change of basis");
  RMat3 inv;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  }
  return inv;
}

RVec3 column(const RMat3& m, std::size_t j) { return {m[0][j], m[1][j], m[2][j]}; }

RVec3 mat_vec(const RMat3& m, const RVec3& v) {
  RVec3 out = zero3();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

std::string linear_to_string(const RVec3& v, const Vars& names) {
  Poly p(names);
  for (std::size_t k = 0; k < 3; ++k) p += Poly::variable(names, k) * v[k];
  return p.to_string();
}

RatExpr linear_expr(const RVec3& v, const Vars& vars) {
  Poly p(vars);
  for (std::size_t k = 0; k < 3; ++k) {
    if (v[k] != 0) p += Poly::variable(vars, k) * v[k];
  }
  return RatExpr(std::move(p));
}

}  // namespace

LieStructure::LieStructure() {
  for (auto& row : c_) {
    for (auto& v : row) v = zero3();
  }
}

LieStructure LieStructure::from_brackets(const RVec3& b01, const RVec3& b12, const RVec3& b20) {
  LieStructure g;
  g.c_[0][1] = b01;
  g.c_[1][0] = scale(b01, -1);
  g.c_[1][2] = b12;
  g.c_[2][1] = scale(b12, -1);
  g.c_[2][0] = b20;
  g.c_[0][2] = scale(b20, -1);
  return g;
}

RVec3 LieStructure::bracket(const RVec3& u, const RVec3& v) const {
  RVec3 out = zero3();
  for (std::size_t i = 0; i < 3; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (v[j] == 0 || i == j) continue;
      out = add(out, scale(c_[i][j], u[i] * v[j]));
    }
  }
  return out;
}

Rational LieStructure::trace_ad(std::size_t i) const {
  Rational t = 0;
  for (std::size_t k = 0; k < 3; ++k) t += c_[i][k][k];
  return t;
}

Rational LieStructure::trace_ad(const RVec3& w) const {
  return w[0] * trace_ad(0) + w[1] * trace_ad(1) + w[2] * trace_ad(2);
}

RVec3 LieStructure::jacobi_defect() const {
  RVec3 j = bracket(c_[0][1], basis(2));
  j = add(j, bracket(c_[1][2], basis(0)));
  j = add(j, bracket(c_[2][0], basis(1)));
  return j;
}

bool LieStructure::is_lie() const {
  return jacobi_defect() == zero3();
}

bool LieStructure::is_unimodular() const {
  return trace_ad(0) == 0 && trace_ad(1) == 0 && trace_ad(2) == 0;
}

LieStructure LieStructure::operator+(const LieStructure& o) const {
  LieStructure g;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) g.c_[i][j] = add(c_[i][j], o.c_[i][j]);
  }
  return g;
}

LieStructure LieStructure::scaled(const Rational& s) const {
  LieStructure g;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) g.c_[i][j] = scale(c_[i][j], s);
  }
  return g;
}

LieStructure LieStructure::in_basis(const RMat3& m) const {
  const RMat3 inv = inverse3(m);
  auto new_bracket = [&](std::size_t a, std::size_t b) {
    return mat_vec(inv, bracket(column(m, a), column(m, b)));
  };
  return from_brackets(new_bracket(0, 1), new_bracket(1, 2), new_bracket(2, 0));
}

std::string LieStructure::to_string(const Vars& names) const {
  const auto& n = names->names();
  std::ostringstream os;
  os << '[' << n[0] << ',' << n[1] << "]=" << linear_to_string(c_[0][1], names) << ", ";
  os << '[' << n[1] << ',' << n[2] << "]=" << linear_to_string(c_[1][2], names) << ", ";
  os << '[' << n[2] << ',' << n[0] << "]=" << linear_to_string(c_[2][0], names);
  return os.str();
}

Rational Cocycle::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i == 0 && j == 1) return xy;
  if (i == 1 && j == 2) return yz;
  if (i == 2 && j == 0) return zx;
  return -(*this)(j, i);
}

Rational Cocycle::operator()(const RVec3& u, const RVec3& v) const {
  Rational s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) s += u[i] * v[j] * (*this)(i, j);
    }
  }
  return s;
}

Cocycle Cocycle::in_basis(const RMat3& m) const {
  return {(*this)(column(m, 0), column(m, 1)), (*this)(column(m, 1), column(m, 2)),
          (*this)(column(m, 2), column(m, 0))};
}

std::string Cocycle::to_string(const Vars& names) const {
  const auto& n = names->names();
  std::ostringstream os;
  os << "A(" << n[0] << ',' << n[1] << ")=" << xy.get_str() << ", ";
  os << "A(" << n[1] << ',' << n[2] << ")=" << yz.get_str() << ", ";
  os << "A(" << n[2] << ',' << n[0] << ")=" << zx.get_str();
  return os.str();
}

PoissonTensor lie_poisson(const LieStructure& g, const Vars& vars) {
  RVec3 defect = g.jacobi_defect();
  if (defect != zero3()) {
    throw MathError("Jacobi identity fails on the triple (" + vars->name(0) + "," + vars->name(1) + "," +
                    vars->name(2) + "): [[x,y],z]+[[y,z],x]+[[z,x],y] = " + linear_to_string(defect, vars));
  }
  return {linear_expr(g.bracket(0, 1), vars), linear_expr(g.bracket(1, 2), vars),
          linear_expr(g.bracket(2, 0), vars)};
}

PoissonTensor constant_tensor(const Cocycle& a, const Vars& vars) {
  return {RatExpr(vars, a.xy), RatExpr(vars, a.yz), RatExpr(vars, a.zx)};
}

Cocycle frozen_argument(const LieStructure& g, const RVec3& xi) {
  auto pair = [&](const RVec3& v) -> Rational { return xi[0] * v[0] + xi[1] * v[1] + xi[2] * v[2]; };
  return {pair(g.bracket(0, 1)), pair(g.bracket(1, 2)), pair(g.bracket(2, 0))};
}

bool is_cocycle(const LieStructure& g, const Cocycle& a) {
  Rational s = a(g.bracket(0, 1), basis(2)) + a(g.bracket(1, 2), basis(0)) + a(g.bracket(2, 0), basis(1));
  return s == 0;
}

Pencil linear_pencil(const LieStructure& g, const Cocycle& a, const Vars& vars) {
  PoissonTensor p = lie_poisson(g, vars);
  if (!is_cocycle(g, a)) throw MathError("form is not a 2-cocycle of the algebra: " + a.to_string(vars));
  return Pencil::unchecked(std::move(p), constant_tensor(a, vars));
}

TwoForm linear_pencil_curvature(const LieStructure& g, const Cocycle& a, const Vars& vars) {
  if (!g.is_lie()) throw MathError("structure constants fail the Jacobi identity");
  if (!is_cocycle(g, a)) throw MathError("form is not a 2-cocycle of the algebra");
  std::array<RatExpr, 3> coef{RatExpr(vars), RatExpr(vars), RatExpr(vars)};
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j] = cyclic_pair(k);
    // Delta_k = {k,i}_P {k,j}_Q - {k,i}_Q {k,j}_P with P linear, Q = A constant.
    RVec3 d = add(scale(g.bracket(k, i), a(k, j)), scale(g.bracket(k, j), -a(k, i)));
    if (d == zero3()) continue;
    any = true;
    Rational numer = 2 * a(basis(k), d) * g.trace_ad(k);
    if (numer == 0) continue;
    coef[k] = RatExpr(vars, numer) / linear_expr(d, vars).pow(2);
  }
  if (!any) throw MathError("all three Deltas vanish identically: the linear pencil is not Kronecker");
  return {coef[2], coef[0], coef[1]};
}

Pencil lie_pencil(const LiePencilDef& d, const Vars& vars) {
  PoissonTensor p = lie_poisson(d.p, vars);
  PoissonTensor q = lie_poisson(d.q, vars);
  if (!(d.p + d.q).is_lie()) throw MathError("Lie structures are not compatible: their sum fails Jacobi");
  return Pencil::unchecked(std::move(p), std::move(q));
}

TwoForm lie_pencil_curvature(const LiePencilDef& d, const Vars& vars) {
  Pencil pencil = lie_pencil(d, vars);
  std::array<RatExpr, 3> coef{RatExpr(vars), RatExpr(vars), RatExpr(vars)};
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    RatExpr delta_k = delta(pencil, k);
    if (delta_k.is_zero()) continue;
    any = true;
    RatExpr xk = RatExpr::variable(vars, k);
    RatExpr tq = RatExpr(vars, d.q.trace_ad(k)) / delta_k;
    RatExpr tp = RatExpr(vars, d.p.trace_ad(k)) / delta_k;
    coef[k] = (bracket(pencil.p(), xk, tq) - bracket(pencil.q(), xk, tp)).scaled(2);
  }
  if (!any) throw MathError("all three Deltas vanish identically: the Lie pencil is not Kronecker");
  return {coef[2], coef[0], coef[1]};
}

bool is_generically_kronecker(const Pencil& pencil) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!delta(pencil, k).is_zero()) return true;
  }
  return false;
}

std::string to_string(ObstructionReport::Verdict v) {
  return v == ObstructionReport::Verdict::not_flat ? "not flat" : "inconclusive";
}

}  // namespace ppk
