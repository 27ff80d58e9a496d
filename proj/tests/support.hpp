#pragma once

// Shared helpers for the test suites: seeded random generators for rationals,
// polynomials, rational functions and Lie algebras, and small independent
// oracles (finite differences, the Jacobi v . curl v identity).

#include <cmath>
#include <filesystem>
#include <random>

#include "ppk/algebra.hpp"
#include "ppk/parser.hpp"
#include "ppk/pencil.hpp"

namespace testing {

using namespace ppk;

inline Vars xyz() {
  static Vars v = make_vars({"x", "y", "z"});
  return v;
}

inline RatExpr ex(const char* s) { return parse(s, xyz()); }

inline PoissonTensor tensor(const char* xy, const char* yz, const char* zx) {
  return PoissonTensor(ex(xy), ex(yz), ex(zx));
}

inline std::filesystem::path fixtures_dir() { return PPK_FIXTURES_DIR; }

class Random {
 public:
  explicit Random(std::uint64_t seed) : eng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Rational rational(int range = 5, int max_den = 4) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int range = 5, int max_den = 4) {
    Rational r;
    do r = rational(range, max_den);
    while (r == 0);
    return r;
  }

  Poly poly(const Vars& vars, std::uint32_t max_degree, int terms) {
    std::vector<Poly::Term> t;
    for (int i = 0; i < terms; ++i) {
      Exponents e(vars->size(), 0);
      std::uint32_t budget = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_degree)));
      for (std::uint32_t k = 0; k < budget; ++k) e[static_cast<std::size_t>(integer(0, static_cast<int>(vars->size()) - 1))]++;
      t.push_back({e, rational()});
    }
    return Poly::from_terms(vars, std::move(t));
  }

  Poly nonzero_poly(const Vars& vars, std::uint32_t max_degree, int terms) {
    Poly p(vars);
    do p = poly(vars, max_degree, terms);
    while (p.is_zero());
    return p;
  }

  RatExpr ratexpr(const Vars& vars, std::uint32_t max_degree = 3, int terms = 3) {
    return RatExpr(poly(vars, max_degree, terms), nonzero_poly(vars, max_degree, terms));
  }

  RVec3 vec() { return {rational(), rational(), rational()}; }

  RMat3 invertible() {
    while (true) {
      RMat3 m{vec(), vec(), vec()};
      Rational d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      if (d != 0) return m;
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// A handful of three-dimensional Lie algebras; random bases make more.
inline std::vector<LieStructure> model_algebras() {
  auto b = [](int x, int y, int z) { return RVec3{Rational(x), Rational(y), Rational(z)}; };
  return {
      LieStructure::from_brackets(b(0, 0, 1), b(1, 0, 0), b(0, 1, 0)),    // so(3)
      LieStructure::from_brackets(b(0, 0, -1), b(1, 0, 0), b(0, 1, 0)),   // sl(2)
      LieStructure::from_brackets(b(0, 0, 0), b(0, -2, 0), b(1, 0, 0)),   // [z,x]=x, [z,y]=2y
      LieStructure::from_brackets(b(0, 1, 0), b(0, 0, 0), b(0, 0, 0)),    // [x,y]=y
      LieStructure::from_brackets(b(0, 0, 1), b(0, 0, 0), b(0, 0, 0)),    // Heisenberg
      LieStructure::from_brackets(b(0, 0, 0), b(-1, -1, 0), b(1, 0, 0)), // [z,x]=x, [z,y]=x+y
  };
}

/// 4th-order central difference of e in direction k at a double point.
inline double fd_partial(const RatExpr& e, std::size_t k, std::vector<double> at, double h = 1e-3) {
  auto f = [&](double s) {
    std::vector<double> p = at;
    p[k] += s;
    return e.eval(std::span<const double>(p));
  };
  return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}

/// v . curl v with v = (p_yz, p_zx, p_xy): the Jacobiator of a 3d bivector up to sign.
inline RatExpr v_curl_v(const PoissonTensor& p) {
  const RatExpr& v1 = p.yz;
  const RatExpr& v2 = p.zx;
  const RatExpr& v3 = p.xy;
  return v1 * (v3.diff(1) - v2.diff(2)) + v2 * (v1.diff(2) - v3.diff(0)) + v3 * (v2.diff(0) - v1.diff(1));
}

using Jacobian = std::array<std::array<RatExpr, 3>, 3>;
using Map3 = std::array<RatExpr, 3>;

/// e(phi(x)): substitutes rational functions for the variables term by term.
inline RatExpr compose(const RatExpr& e, const Map3& phi) {
  auto poly = [&](const Poly& p) {
    RatExpr sum(phi[0].vars());
    for (const auto& t : p.terms()) {
      RatExpr m(phi[0].vars(), t.coef);
      for (std::size_t i = 0; i < 3; ++i) m *= phi[i].pow(t.exp[i]);
      sum += m;
    }
    return sum;
  };
  return poly(e.num()) / poly(e.den());
}

/// J[I][i] = d phi_I / d x_i.
inline Jacobian jacobian(const Map3& phi) {
  Jacobian j{{{phi[0], phi[0], phi[0]}, {phi[0], phi[0], phi[0]}, {phi[0], phi[0], phi[0]}}};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) j[a][b] = phi[a].diff(b);
  return j;
}

/// Inverse by the adjugate.
inline Jacobian inverse(const Jacobian& m) {
  auto cof = [&](std::size_t r, std::size_t c) {
    std::size_t r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  RatExpr det = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
  Jacobian inv = m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) inv[c][r] = cof(r, c) / det;
  return inv;
}

/// Tensor written in the coordinates X = phi(x), re-expressed in x.
inline PoissonTensor pull_tensor(const PoissonTensor& t, const Map3& phi) {
  Jacobian inv = inverse(jacobian(phi));
  auto comp = [&](std::size_t i, std::size_t j) {
    RatExpr s(phi[0].vars());
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) s += inv[i][a] * compose(t.component(a, b), phi) * inv[j][b];
    return s;
  };
  return PoissonTensor(comp(0, 1), comp(1, 2), comp(2, 0));
}

/// phi^* of a 2-form.
inline TwoForm pull_form(const TwoForm& f, const Map3& phi) {
  Jacobian j = jacobian(phi);
  auto comp = [&](std::size_t i, std::size_t k) {
    RatExpr s(phi[0].vars());
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        s += compose(f.component(a, b), phi) * (j[a][i] * j[b][k] - j[a][k] * j[b][i]);
    return s;
  };
  return TwoForm(comp(0, 1), comp(1, 2), comp(2, 0));
}

}  // namespace testing
