#pragma once

#include <array>
#include <string>

#include "ppk/ratexpr.hpp"

namespace ppk {

/// 2-form c_xy dx^dy + c_yz dy^dz + c_zx dz^dx on a 3-dimensional chart.
struct TwoForm {
  RatExpr xy;
  RatExpr yz;
  RatExpr zx;

  explicit TwoForm(const Vars& vars) : xy(vars), yz(vars), zx(vars) {}
  TwoForm(RatExpr a, RatExpr b, RatExpr c) : xy(std::move(a)), yz(std::move(b)), zx(std::move(c)) {}

  const Vars& vars() const { return xy.vars(); }

  bool is_zero() const { return xy.is_zero() && yz.is_zero() && zx.is_zero(); }

  /// Coefficient of dx_i ^ dx_j; skew in (i, j).
  RatExpr component(std::size_t i, std::size_t j) const;

  TwoForm operator+(const TwoForm& o) const { return {xy + o.xy, yz + o.yz, zx + o.zx}; }
  TwoForm operator-(const TwoForm& o) const { return {xy - o.xy, yz - o.yz, zx - o.zx}; }
  TwoForm scaled(const Rational& c) const { return {xy.scaled(c), yz.scaled(c), zx.scaled(c)}; }
  bool operator==(const TwoForm& o) const = default;

  /// e.g. `(-4)/((x+y)^2) dx^dy`; `0` for the zero form.
  std::string to_string() const;
};

/// The pair (i, j) whose wedge is paired with axis k in cyclic order:
/// z -> (x, y), x -> (y, z), y -> (z, x).
constexpr std::array<std::size_t, 2> cyclic_pair(std::size_t k) {
  return {(k + 1) % 3, (k + 2) % 3};
}

}  // namespace ppk
