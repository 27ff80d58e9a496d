#include "ppk/pencil.hpp"

#include "ppk/error.hpp"

namespace ppk {

RatExpr TwoForm::component(std::size_t i, std::size_t j) const {
  if (i > 2 || j > 2) throw InputError("form component index out of range");
  if (i == j) return RatExpr(vars());
  if (i == 0 && j == 1) return xy;
  if (i == 1 && j == 2) return yz;
  if (i == 2 && j == 0) return zx;
  return -component(j, i);
}

std::string TwoForm::to_string() const {
  const auto& n = vars()->names();
  const std::array<std::pair<const RatExpr*, std::string>, 3> parts{{
      {&xy, "d" + n[0] + "^d" + n[1]},
      {&yz, "d" + n[1] + "^d" + n[2]},
      {&zx, "d" + n[2] + "^d" + n[0]},
  }};
  std::string out;
  for (const auto& [c, basis] : parts) {
    if (c->is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coef = c->to_string();
    if (c->is_polynomial() && c->num().terms().size() > 1) coef = '(' + coef + ')';
    out += coef + ' ' + basis;
  }
  return out.empty() ? "0" : out;
}

Pencil::Pencil(PoissonTensor p, PoissonTensor q, Unchecked) : p_(std::move(p)), q_(std::move(q)) {
  if (!(*p_.vars() == *q_.vars())) throw InputError("pencil tensors over different charts");
}

Pencil::Pencil(PoissonTensor p, PoissonTensor q) : Pencil(std::move(p), std::move(q), Unchecked{}) {
  if (!is_compatible(p_, q_)) throw MathError("P and Q are not compatible: P + Q fails the Jacobi identity");
}

Pencil Pencil::unchecked(PoissonTensor p, PoissonTensor q) {
  return Pencil(std::move(p), std::move(q), Unchecked{});
}

std::array<Rational, 3> eval_tensor(const PoissonTensor& t, const Point& at) {
  return {t.xy.eval(at), t.yz.eval(at), t.zx.eval(at)};
}

namespace {

bool all_zero(const std::array<Rational, 3>& v) {
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

}  // namespace

int rank_at(const Pencil& pencil, const Point& at) {
  auto p = eval_tensor(pencil.p(), at);
  auto q = eval_tensor(pencil.q(), at);
  return all_zero(p) && all_zero(q) ? 0 : 2;
}

SpectrumResult spectrum_at(const Pencil& pencil, const Point& at) {
  auto p = eval_tensor(pencil.p(), at);
  auto q = eval_tensor(pencil.q(), at);
  if (all_zero(p) && all_zero(q)) throw MathError("spectrum undefined: pencil has rank 0 at the point");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (p[i] * q[j] - p[j] * q[i] != 0) return {};
    }
  }
  SpectrumResult r;
  r.kind = SpectrumResult::Kind::single;
  if (all_zero(q)) {
    r.alpha = 0;
    r.beta = -1;
    return r;
  }
  std::size_t i = 0;
  while (q[i] == 0) ++i;
  Rational alpha = q[i];
  Rational beta = -p[i];
  if (beta == 0) {
    r.alpha = 1;
    r.beta = 0;
  } else {
    r.alpha = alpha / -beta;
    r.beta = -1;
  }
  return r;
}

bool is_kronecker_at(const Pencil& pencil, const Point& at) {
  return spectrum_at(pencil, at).kind == SpectrumResult::Kind::empty;
}

RatExpr delta(const Pencil& pencil, std::size_t axis) {
  auto [i, j] = cyclic_pair(axis);
  return pencil.p().component(axis, i) * pencil.q().component(axis, j) -
         pencil.q().component(axis, i) * pencil.p().component(axis, j);
}

namespace {

// div sgrad_T(x_k) = sum_i d_i {x_k, x_i}_T
RatExpr divergence_of_hamiltonian(const PoissonTensor& t, std::size_t k) {
  RatExpr sum(t.vars());
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != k) sum += t.component(k, i).diff(i);
  }
  return sum;
}

// {x_k, f}_T = sum_j {x_k, x_j}_T d_j f
RatExpr bracket_with_axis(const PoissonTensor& t, std::size_t k, const RatExpr& f) {
  RatExpr sum(t.vars());
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) continue;
    RatExpr c = t.component(k, j);
    if (!c.is_zero()) sum += c * f.diff(j);
  }
  return sum;
}

}  // namespace

TwoForm curvature(const Pencil& pencil) {
  const Vars& vars = pencil.vars();
  std::array<RatExpr, 3> coef{RatExpr(vars), RatExpr(vars), RatExpr(vars)};
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    RatExpr d = delta(pencil, k);
    if (d.is_zero()) continue;
    any = true;
    RatExpr div_q = divergence_of_hamiltonian(pencil.q(), k) / d;
    RatExpr div_p = divergence_of_hamiltonian(pencil.p(), k) / d;
    coef[k] = (bracket_with_axis(pencil.p(), k, div_q) - bracket_with_axis(pencil.q(), k, div_p)).scaled(2);
  }
  if (!any) throw MathError("all three Deltas vanish identically: P and Q are proportional");
  // coef is indexed by axis: z -> dx^dy, x -> dy^dz, y -> dz^dx.
  return {coef[2], coef[0], coef[1]};
}

bool is_flat(const Pencil& pencil) {
  return curvature(pencil).is_zero();
}

Pencil gl2_transform(const Pencil& pencil, const Matrix2& m) {
  if (m.det() == 0) throw MathError("singular GL(2) matrix");
  const auto& p = pencil.p();
  const auto& q = pencil.q();
  return Pencil::unchecked(p.scaled(m.a) + q.scaled(m.b), p.scaled(m.c) + q.scaled(m.d));
}

NumericPencil NumericPencil::from(const Pencil& pencil) {
  auto wrap = [](const RatExpr& e) -> Fn {
    return [e](const std::array<double, 3>& x) { return e.eval(std::span<const double>(x)); };
  };
  const auto& p = pencil.p();
  const auto& q = pencil.q();
  return {{wrap(p.xy), wrap(p.yz), wrap(p.zx)}, {wrap(q.xy), wrap(q.yz), wrap(q.zx)}};
}

}  // namespace ppk
