#pragma once

// Three-dimensional Lie algebras, 2-cocycles, linear and Lie pencils, and
// linearization of a pencil at a singular point.

#include <array>
#include <optional>
#include <string>

#include "ppk/pencil.hpp"

namespace ppk {

using RVec3 = std::array<Rational, 3>;
using RMat3 = std::array<RVec3, 3>;

/// Structure constants [e_i, e_j] = sum_k c[i][j][k] e_k in the basis (e_0, e_1, e_2),
/// identified with the chart coordinates (x, y, z) of the dual space.
class LieStructure {
 public:
  LieStructure();

  /// From the three brackets [e0,e1], [e1,e2], [e2,e0] given as coefficient vectors.
  static LieStructure from_brackets(const RVec3& b01, const RVec3& b12, const RVec3& b20);

  const RVec3& bracket(std::size_t i, std::size_t j) const { return c_[i][j]; }
  RVec3 bracket(const RVec3& u, const RVec3& v) const;

  /// tr ad(e_i) = sum_k c[i][k][k].
  Rational trace_ad(std::size_t i) const;
  Rational trace_ad(const RVec3& w) const;

  /// [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1]; zero iff Jacobi holds.
  RVec3 jacobi_defect() const;
  bool is_lie() const;
  bool is_unimodular() const;

  LieStructure operator+(const LieStructure& o) const;
  LieStructure scaled(const Rational& s) const;
  bool operator==(const LieStructure& o) const { return c_ == o.c_; }

  /// Structure constants in the basis f_j = sum_i m[i][j] e_i (columns of m).
  /// Throws MathError for singular m.
  LieStructure in_basis(const RMat3& m) const;

  /// e.g. `[x,y]=0, [y,z]=x, [z,x]=y` using the given names for the basis.
  std::string to_string(const Vars& names) const;

 private:
  std::array<std::array<RVec3, 3>, 3> c_;
};

/// Constant skew form A on the algebra, A(e0,e1) = xy, A(e1,e2) = yz, A(e2,e0) = zx.
struct Cocycle {
  Rational xy;
  Rational yz;
  Rational zx;

  Rational operator()(std::size_t i, std::size_t j) const;
  Rational operator()(const RVec3& u, const RVec3& v) const;
  bool is_zero() const { return xy == 0 && yz == 0 && zx == 0; }
  bool operator==(const Cocycle& o) const = default;

  Cocycle in_basis(const RMat3& m) const;
  std::string to_string(const Vars& names) const;
};

struct LiePencilDef {
  LieStructure p;
  LieStructure q;
};

/// Linear Poisson tensor {x_i, x_j} = sum_k c^k_ij x_k. Throws MathError naming the
/// violating triple when Jacobi fails.
PoissonTensor lie_poisson(const LieStructure& g, const Vars& vars);

/// The constant Poisson tensor {x_i, x_j} = A(e_i, e_j).
PoissonTensor constant_tensor(const Cocycle& a, const Vars& vars);

/// A_xi(u, v) = <xi, [u, v]>.
Cocycle frozen_argument(const LieStructure& g, const RVec3& xi);

/// A([x,y],z) + A([y,z],x) + A([z,x],y) == 0 on the basis triple.
bool is_cocycle(const LieStructure& g, const Cocycle& a);

/// The pencil (lie_poisson(g), constant_tensor(a)); validates both inputs.
Pencil linear_pencil(const LieStructure& g, const Cocycle& a, const Vars& vars);

/// Curvature of a linear pencil from the algebra data:
///   c_ij = 2 A(e_k, Delta_k) tr ad e_k / Delta_k^2,
/// where the linear form Delta_k is read as an algebra element.
TwoForm linear_pencil_curvature(const LieStructure& g, const Cocycle& a, const Vars& vars);

/// Pencil of two compatible Lie structures; validates compatibility.
Pencil lie_pencil(const LiePencilDef& d, const Vars& vars);

/// Curvature of a Lie pencil, with trace terms in place of the divergences:
///   c_ij = 2 ( {x_k, tr ad_Q e_k / Delta_k}_P - {x_k, tr ad_P e_k / Delta_k}_Q ).
TwoForm lie_pencil_curvature(const LiePencilDef& d, const Vars& vars);

/// True when the pencil's three Deltas are not all identically zero.
bool is_generically_kronecker(const Pencil& pencil);

struct Linearization {
  enum class Kind { linear, lie };
  Kind kind = Kind::linear;
  /// Rank-2 point: projective pair (alpha : beta) with (alpha P + beta Q)(x) = 0.
  Rational alpha;
  Rational beta;
  /// Rank-2 point: linear part of the vanishing bracket and the evaluated other one.
  LieStructure algebra;
  Cocycle cocycle{};
  /// Rank-0 point: linear parts of P and Q.
  std::optional<LiePencilDef> lie;
};

/// Linearization at a point of the singular set. Throws MathError when the point
/// is not singular or the linear part is not a Lie structure.
Linearization linearize(const Pencil& pencil, const Point& at);

/// Pencil on the tangent space built from a linearization.
Pencil linearized_pencil(const Linearization& lin, const Vars& vars);

struct ObstructionReport {
  enum class Verdict { not_flat, inconclusive };
  Linearization linearization;
  bool kronecker = false;
  std::optional<TwoForm> curvature;
  Verdict verdict = Verdict::inconclusive;
};

/// If the linearization is Kronecker and not flat, the pencil is certified not
/// flat. Otherwise nothing follows (the converse fails).
ObstructionReport flatness_obstruction_report(const Pencil& pencil, const Point& at);

std::string to_string(ObstructionReport::Verdict v);

}  // namespace ppk
