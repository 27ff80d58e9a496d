#pragma once

// Poisson pencils {aP + bQ} on a 3-dimensional chart and their curvature form.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ppk/forms.hpp"
#include "ppk/poisson.hpp"

namespace ppk {

using Point = std::vector<Rational>;

class Pencil {
 public:
  /// Validates that P and Q are Poisson and compatible; throws MathError otherwise.
  Pencil(PoissonTensor p, PoissonTensor q);

  /// Skips validation. For fixtures that need a deliberately broken pair.
  static Pencil unchecked(PoissonTensor p, PoissonTensor q);

  const PoissonTensor& p() const noexcept { return p_; }
  const PoissonTensor& q() const noexcept { return q_; }
  const Vars& vars() const { return p_.vars(); }

 private:
  struct Unchecked {};
  Pencil(PoissonTensor p, PoissonTensor q, Unchecked);

  PoissonTensor p_;
  PoissonTensor q_;
};

/// Values of the three brackets {x,y}, {y,z}, {z,x} at a point.
std::array<Rational, 3> eval_tensor(const PoissonTensor& t, const Point& at);

int rank_at(const Pencil& pencil, const Point& at);

struct SpectrumResult {
  enum class Kind { empty, single };
  Kind kind = Kind::empty;
  /// Projective pair with alpha P(x) + beta Q(x) = 0, normalized so that beta is
  /// -1 when nonzero, else (1 : 0). Set only for Kind::single.
  Rational alpha;
  Rational beta;
};

/// Throws MathError when the pencil has rank 0 at the point.
SpectrumResult spectrum_at(const Pencil& pencil, const Point& at);

bool is_kronecker_at(const Pencil& pencil, const Point& at);

/// Delta_k = {k,i}_P {k,j}_Q - {k,i}_Q {k,j}_P with (i, j) = cyclic_pair(k).
RatExpr delta(const Pencil& pencil, std::size_t axis);

/// Curvature form of a Kronecker pencil, term by term:
///   c_ij = 2 ( {k, div sgrad_Q(k) / Delta_k}_P - {k, div sgrad_P(k) / Delta_k}_Q )
/// A term whose Delta_k is identically zero is omitted. Throws MathError when
/// all three Deltas vanish identically (P and Q proportional).
TwoForm curvature(const Pencil& pencil);

bool is_flat(const Pencil& pencil);

struct Matrix2 {
  Rational a, b, c, d;  // [[a, b], [c, d]]
  Rational det() const { return a * d - b * c; }
};

/// (aP + bQ, cP + dQ); throws MathError for a singular matrix.
Pencil gl2_transform(const Pencil& pencil, const Matrix2& m);

/// Numeric view of a pencil: the brackets {x,y}, {y,z}, {z,x} of P and Q as
/// callables on R^3.
struct NumericPencil {
  using Fn = std::function<double(const std::array<double, 3>&)>;
  std::array<Fn, 3> p;
  std::array<Fn, 3> q;

  static NumericPencil from(const Pencil& pencil);
};

struct NumericCurvatureOptions {
  double step = 1e-3;
  /// |Delta| below this is treated as identically zero and the term skipped.
  double skip_threshold = 1e-12;
  /// |Delta| between skip_threshold and this is reported as near-singular.
  double singular_threshold = 1e-6;
};

/// Finite-difference evaluation of the curvature formula at a point: fourth
/// order central stencils for both the divergences and the outer bracket. Independent of the symbolic path. Throws MathError when a Delta is
/// near-singular at the point.
std::array<double, 3> curvature_numeric(const NumericPencil& pencil, const std::array<double, 3>& at,
                                        const NumericCurvatureOptions& options = {});

}  // namespace ppk
