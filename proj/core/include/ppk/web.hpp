#pragma once

// Planar 3-webs: Blaschke curvature, hexagon closure defect, and the
// Gelfand-Zakharevich reduction of a pencil to a web via its Casimirs.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ppk/pencil.hpp"
#include "ppk/report.hpp"

namespace ppk {

/// Web given by the level sets of three functions of two variables (u, v).
struct Web3 {
  RatExpr f1;
  RatExpr f2;
  RatExpr f3;

  const Vars& vars() const { return f1.vars(); }
};

struct BlaschkeCurvature {
  /// k in theta = k df1 ^ df2.
  RatExpr on_f1f2;
  /// The same form against du ^ dv: k * det d(f1, f2)/d(u, v).
  RatExpr on_uv;
};

/// theta = 2 d/df1 d/df2 log( (df3/df2) / (df3/df1) ) df1 ^ df2, with d/df1, d/df2
/// realized through the inverse Jacobian of (f1, f2) and the log derivative
/// expanded as a quotient. Throws MathError when (f1, f2) is degenerate or
/// f3 is constant along either family.
BlaschkeCurvature blaschke_curvature(const Web3& web);

/// Coefficient predicted for the hexagon defect f3(G) - f3(A) ~ kappa eps^3 at a
/// point: kappa = -theta_12 / (2 df3/df1 df3/df2), theta_12 taken from
/// blaschke_curvature. The -1/2 is measured, not derived; see the web tests.
double blaschke_kappa(const Web3& web, std::span<const double> at);

/// Checks pairwise independence of df1, df2, df3 at each sample point.
bool web_is_regular_at(const Web3& web, std::span<const Point> samples);

using Vec2 = std::array<double, 2>;

struct NumericWeb {
  std::array<std::function<double(const Vec2&)>, 3> f;
  std::array<std::function<Vec2(const Vec2&)>, 3> grad;

  static NumericWeb from(const Web3& web);
};

struct HexagonOptions {
  /// Residual tolerance of the scalar root finder on the target function.
  double tolerance = 1e-12;
  /// Longest predictor step along a level curve.
  double max_step = 0.05;
  /// Abort if a trace wanders farther than this from the start point.
  double max_distance = 10.0;
};

struct HexagonPolygon {
  std::array<Vec2, 7> vertices;  // A, B, C, D, E, F, G
  double defect = 0.0;           // f3(G) - f3(A)
};

/// Traces the polygon A..G starting on the family-1 curve through O with
/// f3(A) - f3(O) = eps. Throws MathError if a trace leaves the region or the
/// root finder does not converge.
HexagonPolygon hexagon_polygon(const NumericWeb& web, const Vec2& origin, double eps,
                               const HexagonOptions& options = {});

struct HexagonFit {
  std::vector<double> eps;
  std::vector<double> defect;
  /// Least-squares slope of log|defect| against log eps.
  double exponent = 0.0;
  /// defect / eps^3 at the smallest eps.
  double kappa_hat = 0.0;
};

HexagonFit hexagon_trace(const NumericWeb& web, const Vec2& origin, std::span<const double> eps_ladder,
                         const HexagonOptions& options = {});

/// Geometric ladder of n values from lo to hi inclusive.
std::vector<double> geometric_ladder(double lo, double hi, std::size_t n);

/// Casimir functions of P, Q and P + Q.
struct CasimirTriple {
  RatExpr f;
  RatExpr g;
  RatExpr h;
};

struct CasimirReport {
  std::vector<Check> checks;
  bool ok() const;
};

/// {f, x_i}_P = 0, {g, x_i}_Q = 0, {h, x_i}_{P+Q} = 0 exactly; pairwise
/// independence of df, dg, dh at the samples; det d(f,g,h)/d(x,y,z) == 0 exactly.
CasimirReport verify_casimirs(const Pencil& pencil, const CasimirTriple& c, std::span<const Point> samples);

struct ReductionReport {
  CasimirReport casimirs;
  /// Chart axis w such that (f, g, w) is a local chart used to realize d/df, d/dg.
  std::size_t fiber_axis = 2;
  /// pi^* theta computed from the Casimirs through the Blaschke formula.
  TwoForm pullback;
  /// Curvature formula output.
  TwoForm formula;
  bool exact_match = false;
  /// Largest |pullback - formula| over the numeric samples.
  double max_deviation = 0.0;
  std::size_t samples_used = 0;
};

/// Computes the Blaschke form of the reduced web (f, g, h) on the (f, g) plane and
/// pulls it back along pi = (f, g), independently of the curvature formula, then
/// compares. h enters only through d/df and d/dg along the fibers of pi, so no
/// explicit elimination of h(f, g) is needed.
ReductionReport reduction_crosscheck(const Pencil& pencil, const CasimirTriple& c,
                                     std::span<const std::array<double, 3>> numeric_samples);

}  // namespace ppk
