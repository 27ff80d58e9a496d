#pragma once

// Poisson bivectors on a 3-dimensional chart (x, y, z).

#include <array>
#include <string>

#include "ppk/ratexpr.hpp"

namespace ppk {

/// Skew 2-tensor stored by its three independent brackets {x,y}, {y,z}, {z,x}.
struct PoissonTensor {
  RatExpr xy;
  RatExpr yz;
  RatExpr zx;

  explicit PoissonTensor(const Vars& vars);
  PoissonTensor(RatExpr xy_, RatExpr yz_, RatExpr zx_);

  const Vars& vars() const { return xy.vars(); }

  /// {x_i, x_j} for coordinate indices i, j in 0..2.
  RatExpr component(std::size_t i, std::size_t j) const;

  bool is_zero() const { return xy.is_zero() && yz.is_zero() && zx.is_zero(); }

  PoissonTensor operator+(const PoissonTensor& o) const;
  PoissonTensor operator-(const PoissonTensor& o) const;
  PoissonTensor scaled(const Rational& c) const;
  bool operator==(const PoissonTensor& o) const = default;
};

struct VectorField {
  std::array<RatExpr, 3> v;

  const RatExpr& operator[](std::size_t i) const { return v[i]; }
  bool operator==(const VectorField& o) const = default;
};

/// {f, g}_P = sum_{i,j} P^{ij} d_i f d_j g.
RatExpr bracket(const PoissonTensor& p, const RatExpr& f, const RatExpr& g);

/// Jacobiator of a 3-dimensional bivector. It is a trivector, so it has a single
/// independent coefficient: the cyclic sum {x,{y,z}} + {y,{z,x}} + {z,{x,y}}.
/// The three summands are kept for diagnostics.
struct Jacobiator {
  RatExpr value;
  std::array<RatExpr, 3> terms;

  bool vanishes() const { return value.is_zero(); }
};

Jacobiator jacobiator(const PoissonTensor& p);

bool is_poisson(const PoissonTensor& p);

/// True iff P + Q is Poisson. Throws MathError naming the tensor if P or Q is
/// not Poisson on its own.
bool is_compatible(const PoissonTensor& p, const PoissonTensor& q);

/// Hamiltonian vector field with components sgrad(P, f)^i = {f, x_i}_P.
VectorField sgrad(const PoissonTensor& p, const RatExpr& f);

RatExpr divergence(const VectorField& v);

}  // namespace ppk
