#include "ppk/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ppk/error.hpp"

namespace ppk {

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VarList::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarList>(std::move(names));
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

Poly::Poly(Vars vars) : vars_(std::move(vars)) {}

Poly::Poly(Vars vars, const Rational& c) : vars_(std::move(vars)) {
  if (c != 0) terms_.push_back({Exponents(vars_->size(), 0), c});
}

Poly Poly::variable(Vars vars, std::size_t index) {
  Exponents e(vars->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), std::move(e), Rational(1));
}

Poly Poly::monomial(Vars vars, Exponents exp, const Rational& c) {
  Poly p(std::move(vars));
  if (exp.size() != p.nvars()) throw InputError("exponent vector length mismatch");
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

Poly Poly::from_terms(Vars vars, std::vector<Term> terms) {
  std::map<Exponents, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coef);
    if (!inserted) it->second += t.coef;
  }
  Poly p(std::move(vars));
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, c});
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](auto e) { return e == 0; });
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().coef;
}

bool Poly::is_one() const {
  return is_constant() && !terms_.empty() && terms_[0].coef == 1;
}

std::uint32_t Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.front().exp;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

Poly Poly::coefficient_in(std::size_t var, std::uint32_t k) const {
  Poly out(vars_);
  for (const auto& t : terms_) {
    if (t.exp[var] == k) {
      Term u = t;
      u.exp[var] = 0;
      out.terms_.push_back(std::move(u));
    }
  }
  // Zeroing one coordinate of a grlex-sorted list of equal var-degree keeps the order.
  return out;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out(degree_in(var) + 1, Poly(vars_));
  for (const auto& t : terms_) {
    Term u = t;
    u.exp[var] = 0;
    out[t.exp[var]].terms_.push_back(std::move(u));
  }
  return out;
}

void Poly::check_same_ring(const Poly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) {
    throw InputError("polynomials over different variable lists");
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

void Poly::merge_add(const Poly& o, bool subtract) {
  check_same_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->exp, b->exp))) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || grlex_greater(b->exp, a->exp)) {
      out.push_back({b->exp, subtract ? Rational(-b->coef) : b->coef});
      ++b;
    } else {
      Rational c = subtract ? Rational(a->coef - b->coef) : Rational(a->coef + b->coef);
      if (c != 0) out.push_back({std::move(a->exp), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  merge_add(o, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  merge_add(o, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.vars_);
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  std::map<Exponents, Rational, GrlexGreater> acc;
  const std::size_t n = a.nvars();
  Exponents e(n);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = s.exp[i] + t.exp[i];
      auto [it, inserted] = acc.try_emplace(e, s.coef * t.coef);
      if (!inserted) it->second += s.coef * t.coef;
    }
  }
  Poly p(a.vars_);
  p.terms_.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c != 0) p.terms_.push_back({k, c});
  }
  return p;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  }
  return true;
}

Poly Poly::pow(std::uint32_t n) const {
  Poly result(vars_, Rational(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Poly Poly::diff(std::size_t var) const {
  if (var >= nvars()) throw InputError("differentiation variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term u = t;
    u.coef *= t.exp[var];
    u.exp[var] -= 1;
    out.push_back(std::move(u));
  }
  // Lowering one exponent can reorder terms of different total degree; re-sort.
  return from_terms(vars_, std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
  check_same_ring(b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_constant()) return *this * Rational(1 / b.constant_value());
  Poly r = *this;
  std::vector<Term> q;
  const Term& lb = b.leading_term();
  const std::size_t n = nvars();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!divides(lb.exp, lr.exp)) return std::nullopt;
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = lr.exp[i] - lb.exp[i];
    Rational c = lr.coef / lb.coef;
    Poly t = monomial(vars_, e, c);
    r -= t * b;
    q.push_back({std::move(e), std::move(c)});
  }
  Poly out(vars_);
  out.terms_ = std::move(q);  // generated in strictly decreasing order
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coef());
}

Rational Poly::rational_content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return abs(r);
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point has wrong dimension");
  Rational sum = 0;
  Rational term;
  for (const auto& t : terms_) {
    term = t.coef;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exp[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double Poly::eval(std::span<const double> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double term = t.coef.get_d();
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exp[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_->name(i);
      if (t.exp[i] > 1) mono += '^' + std::to_string(t.exp[i]);
    }
    Rational mag = abs(t.coef);
    bool negative = t.coef < 0;
    std::string body;
    if (mono.empty()) {
      body = rational_to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = rational_to_string(mag) + "*" + mono;
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    os << body;
    first = false;
  }
  return os.str();
}

}  // namespace ppk
