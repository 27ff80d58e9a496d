#include "ppk/ratexpr.hpp"

#include "ppk/error.hpp"

namespace ppk {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw MathError("internal: expected exact polynomial division");
  return *q;
}

bool is_bare_factor(const Poly& f, std::uint32_t multiplicity) {
  if (f.terms().size() != 1 || f.leading_coef() != 1) return false;
  if (multiplicity == 1) return true;
  std::uint32_t nonzero = 0;
  for (auto e : f.leading_term().exp) {
    if (e > 1) return false;
    nonzero += e;
  }
  return nonzero == 1;
}

}  // namespace

RatExpr::RatExpr(Vars vars) : num_(vars), den_(vars, Rational(1)) {}

RatExpr::RatExpr(Vars vars, const Rational& c) : num_(vars, c), den_(vars, Rational(1)) {}

RatExpr::RatExpr(Poly num) : num_(std::move(num)), den_(num_.vars(), Rational(1)) {}

RatExpr::RatExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatExpr::RatExpr(Poly num, Poly den, bool already_reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!already_reduced) {
    normalize();
  } else if (!den_.is_zero() && den_.leading_coef() != 1) {
    Rational s = 1 / den_.leading_coef();
    num_ *= s;
    den_ *= s;
  }
}

RatExpr RatExpr::variable(Vars vars, std::size_t index) {
  return RatExpr(Poly::variable(std::move(vars), index));
}

RatExpr RatExpr::variable(const Vars& vars, const std::string& name) {
  auto idx = vars->index_of(name);
  if (!idx) throw InputError("undeclared variable '" + name + "'");
  return variable(vars, *idx);
}

void RatExpr::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(num_.vars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  Rational s = 1 / den_.leading_coef();
  if (s != 1) {
    num_ *= s;
    den_ *= s;
  }
}

Rational RatExpr::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RatExpr RatExpr::operator-() const {
  return RatExpr(-num_, den_, true);
}

RatExpr& RatExpr::operator+=(const RatExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatExpr(num_ + o.num_, den_);
    return *this;
  }
  if (den_.is_one()) {
    *this = RatExpr(num_ * o.den_ + o.num_, o.den_, true);
    return *this;
  }
  if (o.den_.is_one()) {
    *this = RatExpr(num_ + o.num_ * den_, den_, true);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly dq = exact(o.den_, g);
  Poly bq = exact(den_, g);
  *this = RatExpr(num_ * dq + o.num_ * bq, den_ * dq);
  return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) {
  return *this += -o;
}

RatExpr& RatExpr::operator*=(const RatExpr& o) {
  if (is_zero() || o.is_zero()) return *this = RatExpr(vars());
  // Cross-cancel; inputs are reduced so the product is reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact(num_, g1) * exact(o.num_, g2);
  Poly d = exact(den_, g2) * exact(o.den_, g1);
  *this = RatExpr(std::move(n), std::move(d), true);
  return *this;
}

RatExpr& RatExpr::operator/=(const RatExpr& o) {
  return *this *= o.inverse();
}

RatExpr RatExpr::scaled(const Rational& c) const {
  if (c == 0) return RatExpr(vars());
  return RatExpr(num_ * c, den_, true);
}

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the zero rational function");
  return RatExpr(den_, num_, true);
}

RatExpr RatExpr::pow(std::uint32_t n) const {
  return RatExpr(num_.pow(n), den_.pow(n), true);
}

RatExpr RatExpr::diff(std::size_t var) const {
  if (den_.is_constant()) return RatExpr(num_.diff(var) * Rational(1 / den_.constant_value()));
  // (n' d - n d') / d^2, cancelling the common factor of d first.
  Poly dd = den_.diff(var);
  Poly g = gcd(den_, dd);
  Poly d_over_g = exact(den_, g);
  Poly dd_over_g = exact(dd, g);
  Poly n = num_.diff(var) * d_over_g - num_ * dd_over_g;
  return RatExpr(std::move(n), den_ * d_over_g);
}

namespace {

// Squarefree factors of den that vanish, joined with '*'; den itself if none
// of them does on its own (rounding in the double path).
template <class Vanishes>
std::string vanishing_factors(const Poly& den, Vanishes vanishes) {
  Rational unit;
  std::string out;
  for (const auto& [f, m] : squarefree_factors(den, unit)) {
    if (!vanishes(f)) continue;
    if (!out.empty()) out += "*";
    out += f.to_string();
  }
  return out.empty() ? den.to_string() : out;
}

}  // namespace

Rational RatExpr::eval(std::span<const Rational> point) const {
  Rational d = den_.eval(point);
  if (d == 0) {
    std::string f = vanishing_factors(den_, [&](const Poly& q) { return q.eval(point) == 0; });
    throw PoleError("pole: denominator factor " + f + " vanishes", f);
  }
  return num_.eval(point) / d;
}

double RatExpr::eval(std::span<const double> point) const {
  double d = den_.eval(point);
  if (d == 0.0) {
    std::string f = vanishing_factors(den_, [&](const Poly& q) { return q.eval(point) == 0.0; });
    throw PoleError("pole: denominator factor " + f + " vanishes", f);
  }
  return num_.eval(point) / d;
}

std::string RatExpr::to_string() const {
  if (den_.is_one()) return num_.to_string();
  Rational unit;
  auto factors = squarefree_factors(den_, unit);
  std::string den;
  for (const auto& [f, m] : factors) {
    if (!den.empty()) den += '*';
    if (is_bare_factor(f, m) || (factors.size() == 1 && m == 1)) {
      den += f.to_string();
    } else {
      den += '(' + f.to_string() + ')';
    }
    if (m > 1) den += '^' + std::to_string(m);
  }
  // den is monic, so the product of monic factors reproduces it exactly (unit == 1).
  return '(' + num_.to_string() + ")/(" + den + ')';
}

}  // namespace ppk
