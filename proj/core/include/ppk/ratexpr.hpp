#pragma once

#include <span>
#include <string>
#include <vector>

#include "ppk/poly.hpp"

namespace ppk {

/// Exact multivariate rational function num/den over Q in canonical form.
///
/// Invariants: den != 0, gcd(num, den) = 1, den monic under graded-lex order.
/// Two RatExprs are equal as rational functions iff their (num, den) pairs are
/// identical, so operator== is structural.
class RatExpr {
 public:
  explicit RatExpr(Vars vars);
  RatExpr(Vars vars, const Rational& c);
  explicit RatExpr(Poly num);
  /// Reduces num/den; throws DivisionByZero if den is zero.
  RatExpr(Poly num, Poly den);

  static RatExpr variable(Vars vars, std::size_t index);
  static RatExpr variable(const Vars& vars, const std::string& name);

  const Vars& vars() const noexcept { return num_.vars(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const;

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o);
  RatExpr& operator-=(const RatExpr& o);
  RatExpr& operator*=(const RatExpr& o);
  RatExpr& operator/=(const RatExpr& o);

  friend RatExpr operator+(RatExpr a, const RatExpr& b) { return a += b; }
  friend RatExpr operator-(RatExpr a, const RatExpr& b) { return a -= b; }
  friend RatExpr operator*(RatExpr a, const RatExpr& b) { return a *= b; }
  friend RatExpr operator/(RatExpr a, const RatExpr& b) { return a /= b; }
  friend RatExpr operator*(const Rational& c, RatExpr a) { return a.scaled(c); }
  friend RatExpr operator*(RatExpr a, const Rational& c) { return a.scaled(c); }

  bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatExpr& o) const { return !(*this == o); }

  RatExpr scaled(const Rational& c) const;
  RatExpr inverse() const;
  RatExpr pow(std::uint32_t n) const;

  /// Exact partial derivative (quotient rule), canonical.
  RatExpr diff(std::size_t var) const;

  /// Exact substitution; throws PoleError when the denominator vanishes.
  Rational eval(std::span<const Rational> point) const;
  /// IEEE double substitution; throws PoleError on an exactly-zero denominator.
  double eval(std::span<const double> point) const;

  /// Canonical text, re-parseable by parse(): `num` or `(num)/(den)` with the
  /// denominator printed as a product of squarefree powers.
  std::string to_string() const;

 private:
  RatExpr(Poly num, Poly den, bool already_reduced);
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace ppk
