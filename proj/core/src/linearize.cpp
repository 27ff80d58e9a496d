#include "ppk/algebra.hpp"
#include "ppk/error.hpp"

namespace ppk {

namespace {

// Structure constants c^m_ij = d_m T^{ij}(x): the linear part of T at x.
LieStructure linear_part(const PoissonTensor& t, const Point& at) {
  auto grad = [&](const RatExpr& e) {
    return RVec3{e.diff(0).eval(at), e.diff(1).eval(at), e.diff(2).eval(at)};
  };
  return LieStructure::from_brackets(grad(t.xy), grad(t.yz), grad(t.zx));
}

void require_lie(const LieStructure& g, const char* what) {
  if (!g.is_lie()) throw MathError(std::string("linear part of ") + what + " is not a Lie structure");
}

}  // namespace

Linearization linearize(const Pencil& pencil, const Point& at) {
  Linearization lin;
  if (rank_at(pencil, at) == 0) {
    lin.kind = Linearization::Kind::lie;
    LiePencilDef d{linear_part(pencil.p(), at), linear_part(pencil.q(), at)};
    require_lie(d.p, "P");
    require_lie(d.q, "Q");
    require_lie(d.p + d.q, "P + Q");
    lin.lie = d;
    return lin;
  }

  SpectrumResult s = spectrum_at(pencil, at);
  if (s.kind == SpectrumResult::Kind::empty) {
    throw MathError("point is not singular: the pencil is Kronecker of rank 2 there");
  }
  lin.kind = Linearization::Kind::linear;
  lin.alpha = s.alpha;
  lin.beta = s.beta;
  PoissonTensor vanishing = pencil.p().scaled(s.alpha) + pencil.q().scaled(s.beta);
  lin.algebra = linear_part(vanishing, at);
  require_lie(lin.algebra, "the vanishing bracket");

  auto p_at = eval_tensor(pencil.p(), at);
  bool p_nonzero = p_at[0] != 0 || p_at[1] != 0 || p_at[2] != 0;
  auto other = p_nonzero ? p_at : eval_tensor(pencil.q(), at);
  lin.cocycle = {other[0], other[1], other[2]};
  if (!is_cocycle(lin.algebra, lin.cocycle)) {
    throw MathError("evaluated bracket is not a cocycle of the linearized algebra");
  }
  return lin;
}

Pencil linearized_pencil(const Linearization& lin, const Vars& vars) {
  if (lin.kind == Linearization::Kind::lie) return lie_pencil(*lin.lie, vars);
  return linear_pencil(lin.algebra, lin.cocycle, vars);
}

ObstructionReport flatness_obstruction_report(const Pencil& pencil, const Point& at) {
  ObstructionReport r;
  r.linearization = linearize(pencil, at);
  const Vars& vars = pencil.vars();
  Pencil lp = linearized_pencil(r.linearization, vars);
  r.kronecker = is_generically_kronecker(lp);
  if (r.kronecker) {
    r.curvature = r.linearization.kind == Linearization::Kind::lie
                      ? lie_pencil_curvature(*r.linearization.lie, vars)
                      : linear_pencil_curvature(r.linearization.algebra, r.linearization.cocycle, vars);
    if (!r.curvature->is_zero()) r.verdict = ObstructionReport::Verdict::not_flat;
  }
  return r;
}

}  // namespace ppk
