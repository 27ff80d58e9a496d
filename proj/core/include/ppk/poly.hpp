#pragma once

// Sparse multivariate polynomials over Q.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ppk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordered, immutable list of variable names shared by all polynomials of one ring.
class VarList {
 public:
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarList& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarList>;

Vars make_vars(std::vector<std::string> names);

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic comparison; returns true when a > b.
bool grlex_greater(const Exponents& a, const Exponents& b);

class Poly {
 public:
  struct Term {
    Exponents exp;
    Rational coef;
  };

  explicit Poly(Vars vars);
  Poly(Vars vars, const Rational& c);

  static Poly variable(Vars vars, std::size_t index);
  static Poly monomial(Vars vars, Exponents exp, const Rational& c);
  /// Builds from unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(Vars vars, std::vector<Term> terms);

  const Vars& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_->size(); }

  /// Terms in descending graded-lex order.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant value; only meaningful when is_constant().
  Rational constant_value() const;
  bool is_one() const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coef() const { return terms_.front().coef; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Coefficient of var^k as a polynomial with var's exponent zeroed.
  Poly coefficient_in(std::size_t var, std::uint32_t k) const;
  /// All coefficients in var, index = power.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(std::uint32_t n) const;
  Poly diff(std::size_t var) const;

  /// Exact quotient if b divides *this, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& b) const;

  /// Scales so that the leading coefficient is 1 (zero stays zero).
  Poly monic() const;
  /// gcd of numerators over lcm of denominators of all coefficients, positive.
  Rational rational_content() const;

  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  /// Canonical text: terms in graded-lex order, `*` between factors, no spaces.
  std::string to_string() const;

 private:
  void check_same_ring(const Poly& o) const;
  void merge_add(const Poly& o, bool subtract);

  Vars vars_;
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized monic (leading coefficient 1); gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// gcd of the coefficients of a viewed as a polynomial in var.
Poly content_in(const Poly& a, std::size_t var);

/// Squarefree decomposition a = c * prod f_i^i, factors monic and pairwise coprime.
/// Returned pairs (f_i, i) sorted by i; c is returned separately.
std::vector<std::pair<Poly, std::uint32_t>> squarefree_factors(const Poly& a, Rational& unit);

std::string rational_to_string(const Rational& r);

}  // namespace ppk
