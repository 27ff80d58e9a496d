// Multivariate gcd over Q by recursive content / primitive-part pseudo-remainder sequences.

#include <algorithm>

#include "ppk/error.hpp"
#include "ppk/poly.hpp"

namespace ppk {

namespace {

std::optional<std::size_t> first_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

// Among the variables both depend on, the one of least degree.
std::optional<std::size_t> shared_variable(const Poly& a, const Poly& b) {
  std::optional<std::size_t> best;
  std::uint32_t best_degree = 0;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (!a.depends_on(v) || !b.depends_on(v)) continue;
    std::uint32_t d = std::max(a.degree_in(v), b.degree_in(v));
    if (!best || d < best_degree) {
      best = v;
      best_degree = d;
    }
  }
  return best;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw MathError("internal: expected exact polynomial division");
  return *q;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b, as polynomials in var.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Poly lb = b.coefficient_in(var, db);
  int steps = static_cast<int>(a.degree_in(var)) - static_cast<int>(db) + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::uint32_t da = a.degree_in(var);
    Exponents e(a.nvars(), 0);
    e[var] = da - db;
    Poly shift = Poly::monomial(a.vars(), e, Rational(1));
    a = lb * a - a.coefficient_in(var, da) * shift * b;
    --steps;
  }
  if (steps > 0 && !a.is_zero()) a *= lb.pow(static_cast<std::uint32_t>(steps));
  return a;
}

Poly primitive_part(const Poly& a, std::size_t var) {
  if (a.is_zero()) return a;
  return exact(a, content_in(a, var)).monic();
}

// Coefficients in var after substituting `at` for every other variable.
std::vector<Rational> univariate_image(const Poly& a, std::size_t var, const std::vector<Rational>& at) {
  std::vector<Rational> out(a.degree_in(var) + 1);
  for (const auto& t : a.terms()) {
    Rational c = t.coef;
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (i == var || t.exp[i] == 0) continue;
      Rational x;
      mpz_pow_ui(x.get_num_mpz_t(), at[i].get_num_mpz_t(), t.exp[i]);
      c *= x;
    }
    out[t.exp[var]] += c;
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<Rational> f, std::vector<Rational> g) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(f);
  trim(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    while (f.size() >= g.size()) {
      Rational k = f.back() / g.back();
      std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= k * g[i];
      f.pop_back();
      trim(f);
      if (f.empty()) break;
    }
    std::swap(f, g);
  }
  return f.empty() ? 0 : f.size() - 1;
}

// True when p and q, both of positive degree in var, certainly have no common
// factor of positive degree in var: some specialization of the other
// variables keeps both leading coefficients and has coprime images.
bool coprime_in(const Poly& p, const Poly& q, std::size_t var) {
  static const int offsets[] = {3, -5, 7, 11, -13, 17};
  const std::uint32_t dp = p.degree_in(var);
  const std::uint32_t dq = q.degree_in(var);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> at(p.nvars());
    for (std::size_t i = 0; i < at.size(); ++i) at[i] = offsets[(i + 2 * static_cast<std::size_t>(attempt)) % 6] + attempt;
    auto fp = univariate_image(p, var, at);
    auto fq = univariate_image(q, var, at);
    if (fp[dp] == 0 || fq[dq] == 0) continue;
    if (univariate_gcd_degree(std::move(fp), std::move(fq)) == 0) return true;
    return false;
  }
  return false;
}

bool is_monomial(const Poly& a) { return a.terms().size() == 1; }

// gcd of a monomial m with any nonzero polynomial: componentwise minimum exponents.
Poly monomial_gcd(const Poly& m, const Poly& b) {
  Exponents e = m.leading_term().exp;
  for (const auto& t : b.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.exp[i]);
  }
  return Poly::monomial(m.vars(), e, Rational(1));
}

}  // namespace

Poly content_in(const Poly& a, std::size_t var) {
  Poly g(a.vars());
  for (const auto& c : a.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(a.vars(), Rational(1));
  if (a == b) return a.monic();
  if (is_monomial(a)) return monomial_gcd(a, b);
  if (is_monomial(b)) return monomial_gcd(b, a);

  // Cheap exits: one divides the other.
  if (a.total_degree() <= b.total_degree()) {
    if (b.divide_exact(a)) return a.monic();
  } else {
    if (a.divide_exact(b)) return b.monic();
  }

  const auto shared = shared_variable(a, b);
  if (!shared) {
    // No variable in common: the gcd lives in the content of either side.
    const std::size_t v = *first_variable(a, b);
    return a.depends_on(v) ? gcd(content_in(a, v), b) : gcd(a, content_in(b, v));
  }
  const std::size_t v = *shared;

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd(ca, cb);

  Poly p = exact(a, ca);
  Poly q = exact(b, cb);
  if (coprime_in(p, q, v)) return c.monic();
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

  // Subresultant remainder sequence: coefficients stay polynomial in size
  // without taking contents at every step.
  Poly g(a.vars(), Rational(1));
  Poly h(a.vars(), Rational(1));
  std::uint32_t d = p.degree_in(v) - q.degree_in(v);
  while (true) {
    Poly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.monic();
    p = std::move(q);
    q = exact(r, g * h.pow(d));
    g = p.coefficient_in(v, p.degree_in(v));
    if (d > 0) h = exact(g.pow(d), h.pow(d - 1));
    d = p.degree_in(v) - q.degree_in(v);
  }
  return (c * primitive_part(q, v)).monic();
}

std::vector<std::pair<Poly, std::uint32_t>> squarefree_factors(const Poly& a, Rational& unit) {
  if (a.is_zero()) throw MathError("squarefree decomposition of zero");
  unit = a.leading_coef();
  std::vector<std::pair<Poly, std::uint32_t>> collected;

  Poly rest = a.monic();
  for (std::size_t v = 0; v < rest.nvars() && !rest.is_constant(); ++v) {
    if (!rest.depends_on(v)) continue;
    const Poly cont = content_in(rest, v);
    Poly p = exact(rest, cont).monic();
    rest = cont.monic();

    // Yun's algorithm in v.
    Poly dp = p.diff(v);
    Poly g = gcd(p, dp);
    Poly b = exact(p, g);
    Poly c = exact(dp, g);
    Poly d = c - b.diff(v);
    std::uint32_t i = 1;
    while (!b.is_constant()) {
      Poly f = gcd(b, d);
      if (!f.is_constant()) collected.emplace_back(f.monic(), i);
      b = exact(b, f);
      c = exact(d, f);
      d = c - b.diff(v);
      ++i;
    }
  }

  std::vector<std::pair<Poly, std::uint32_t>> merged;
  std::sort(collected.begin(), collected.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  for (auto& [f, m] : collected) {
    if (!merged.empty() && merged.back().second == m) {
      merged.back().first = merged.back().first * f;
    } else {
      merged.emplace_back(std::move(f), m);
    }
  }
  for (auto& [f, m] : merged) f = f.monic();
  return merged;
}

}  // namespace ppk
