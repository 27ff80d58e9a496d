#include "ppk/connection.hpp"

#include "ppk/error.hpp"

namespace ppk {

namespace {

using Mat = std::array<std::array<RatExpr, 3>, 3>;
// gamma[e][d][c]: coefficient of E_e in nabla_{E_d} E_c.
using FrameSymbols = std::array<std::array<std::array<RatExpr, 3>, 3>, 3>;

RatExpr zero(const Vars& vars) { return RatExpr(vars); }

Mat zero_mat(const Vars& vars) {
  RatExpr z = zero(vars);
  return {{{z, z, z}, {z, z, z}, {z, z, z}}};
}

FrameSymbols zero_symbols(const Vars& vars) {
  Mat z = zero_mat(vars);
  return {z, z, z};
}

const Vars& frame_vars(const Frame& f) { return f.x[0].vars(); }

// m[i][e] = E_e^i
Mat frame_matrix(const Frame& f) {
  Mat m = zero_mat(frame_vars(f));
  for (std::size_t e = 0; e < 3; ++e) {
    for (std::size_t i = 0; i < 3; ++i) m[i][e] = f[e][i];
  }
  return m;
}

// Rows are the coframe: inv[b][i] = dual 1-form of E_b evaluated on d_i.
Mat inverse(const Mat& m) {
  RatExpr det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det.is_zero()) throw MathError("frame is degenerate: det(X, Y, Z) vanishes identically");
  Mat inv = zero_mat(det.vars());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return inv;
}

std::array<RatExpr, 3> decompose(const Mat& coframe, const VectorField& v) {
  std::array<RatExpr, 3> out{zero(v[0].vars()), zero(v[0].vars()), zero(v[0].vars())};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < 3; ++i) out[b] += coframe[b][i] * v[i];
  }
  return out;
}

RatExpr derive(const VectorField& e, const RatExpr& f) {
  return e[0] * f.diff(0) + e[1] * f.diff(1) + e[2] * f.diff(2);
}

FrameSymbols frame_symbols(const Frame& frame, const PencilConnection& conn) {
  FrameSymbols g = zero_symbols(frame_vars(frame));
  for (std::size_t d = 0; d < 3; ++d) {
    g[0][d][0] = conn.alpha[d];
    g[0][d][1] = conn.beta[d];
    g[1][d][1] = -conn.alpha[d];
    g[0][d][2] = conn.gamma[d];
    g[2][d][2] = -conn.alpha[d];
  }
  return g;
}

// structure[d][a][b]: coefficient of E_d in [E_a, E_b].
FrameSymbols structure_functions(const Frame& frame, const Mat& coframe) {
  FrameSymbols s = zero_symbols(frame_vars(frame));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      auto coef = decompose(coframe, lie_bracket(frame[a], frame[b]));
      for (std::size_t d = 0; d < 3; ++d) {
        s[d][a][b] = coef[d];
        s[d][b][a] = -coef[d];
      }
    }
  }
  return s;
}

VectorField combine(const Frame& frame, const std::array<RatExpr, 3>& coef) {
  VectorField v{{zero(coef[0].vars()), zero(coef[0].vars()), zero(coef[0].vars())}};
  for (std::size_t e = 0; e < 3; ++e) {
    for (std::size_t i = 0; i < 3; ++i) v.v[i] += coef[e] * frame[e][i];
  }
  return v;
}

bool is_zero(const VectorField& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Check tensor_check(const char* name, const PoissonTensor& want, const PoissonTensor& got) {
  Check c{name, want == got, ""};
  if (!c.passed) {
    PoissonTensor diff = want - got;
    c.detail = "difference {x,y}=" + diff.xy.to_string() + ", {y,z}=" + diff.yz.to_string() +
               ", {z,x}=" + diff.zx.to_string();
  }
  return c;
}

Check zero_check(const char* name, const RatExpr& e) {
  return {name, e.is_zero(), e.is_zero() ? "" : e.to_string()};
}

}  // namespace

PoissonTensor wedge(const VectorField& u, const VectorField& v) {
  auto comp = [&](std::size_t i, std::size_t j) { return u[i] * v[j] - u[j] * v[i]; };
  return PoissonTensor(comp(0, 1), comp(1, 2), comp(2, 0));
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
  return {{derive(u, v[0]) - derive(v, u[0]), derive(u, v[1]) - derive(v, u[1]), derive(u, v[2]) - derive(v, u[2])}};
}

bool FrameReport::ok() const {
  if (!decomposition) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

FrameReport verify_frame(const Pencil& pencil, const Frame& frame) {
  FrameReport r;
  r.checks.push_back(tensor_check("P = X^Y", pencil.p(), wedge(frame.x, frame.y)));
  r.checks.push_back(tensor_check("Q = X^Z", pencil.q(), wedge(frame.x, frame.z)));

  Mat coframe = inverse(frame_matrix(frame));
  auto xy = decompose(coframe, lie_bracket(frame.x, frame.y));
  auto xz = decompose(coframe, lie_bracket(frame.x, frame.z));
  auto yz = decompose(coframe, lie_bracket(frame.y, frame.z));
  r.checks.push_back(zero_check("[X,Y] has no Z component", xy[2]));
  r.checks.push_back(zero_check("[X,Z] has no Y component", xz[1]));
  r.checks.push_back(zero_check("[X,Y] and [X,Z] share c", xy[1] - xz[2]));
  r.decomposition = FrameDecomposition{xy[0], xz[0], xy[1], yz[0], yz[1], yz[2]};
  return r;
}

PencilConnection solve_connection(const Frame& frame, const FrameDecomposition& d, Gauge gauge) {
  const Vars& vars = d.a.vars();
  RatExpr zero(vars);
  PencilConnection c{
      .alpha = {-d.c, -d.w, d.v},
      .beta = {d.a - d.w, zero, zero},
      .gamma = {d.b + d.v, d.u, zero},
  };
  if (gauge == Gauge::alternate) {
    RatExpr x = RatExpr::variable(vars, 0), y = RatExpr::variable(vars, 1), z = RatExpr::variable(vars, 2);
    c.beta[1] = x;
    c.beta[2] = y;
    c.gamma[1] = d.u + y;
    c.gamma[2] = z;
  }
  for (const auto& t : torsion(frame, c)) {
    if (!is_zero(t)) throw MathError("connection is not torsion-free: frame decomposition is inconsistent");
  }
  return c;
}

std::array<VectorField, 3> torsion(const Frame& frame, const PencilConnection& conn) {
  const Vars& vars = frame_vars(frame);
  Mat coframe = inverse(frame_matrix(frame));
  FrameSymbols g = frame_symbols(frame, conn);
  const std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  auto residual = [&](std::size_t p) {
    auto [a, b] = pairs[p];
    auto br = decompose(coframe, lie_bracket(frame[a], frame[b]));
    std::array<RatExpr, 3> t{zero(vars), zero(vars), zero(vars)};
    for (std::size_t e = 0; e < 3; ++e) t[e] = g[e][a][b] - g[e][b][a] - br[e];
    return combine(frame, t);
  };
  return {residual(0), residual(1), residual(2)};
}

RicciResult ricci(const Frame& frame, const PencilConnection& conn) {
  const Vars& vars = frame_vars(frame);
  Mat coframe = inverse(frame_matrix(frame));
  FrameSymbols g = frame_symbols(frame, conn);
  FrameSymbols s = structure_functions(frame, coframe);

  // Component e of R(E_a, E_b) E_c.
  auto riemann = [&](std::size_t e, std::size_t a, std::size_t b, std::size_t c) {
    RatExpr r = derive(frame[a], g[e][b][c]) - derive(frame[b], g[e][a][c]);
    for (std::size_t d = 0; d < 3; ++d) {
      r += g[d][b][c] * g[e][a][d] - g[d][a][c] * g[e][b][d] - s[d][a][b] * g[e][d][c];
    }
    return r;
  };

  RicciResult out{.ric = zero_mat(vars), .alt = TwoForm(vars)};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t a = 0; a < 3; ++a) out.ric[b][c] += riemann(a, b, a, c);
    }
  }

  // Alt Ric on (d_i, d_j) = sum coframe[b][i] coframe[c][j] Alt(E_b, E_c).
  const Rational half(1, 2);
  auto chart = [&](std::size_t i, std::size_t j) {
    RatExpr v = zero(vars);
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (b == c) continue;
        v += coframe[b][i] * coframe[c][j] * (out.ric[b][c] - out.ric[c][b]).scaled(half);
      }
    }
    return v;
  };
  out.alt = TwoForm(chart(0, 1), chart(1, 2), chart(2, 0));
  return out;
}

Christoffel chart_christoffel(const Frame& frame, const PencilConnection& conn) {
  const Vars& vars = frame_vars(frame);
  Mat m = frame_matrix(frame);
  Mat coframe = inverse(m);
  FrameSymbols g = frame_symbols(frame, conn);
  Christoffel out = zero_symbols(vars);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // nabla_{d_i} d_j on the frame, d_j = sum_b coframe[b][j] E_b
      std::array<RatExpr, 3> w{zero(vars), zero(vars), zero(vars)};
      for (std::size_t e = 0; e < 3; ++e) {
        w[e] = coframe[e][j].diff(i);
        for (std::size_t b = 0; b < 3; ++b) {
          for (std::size_t d = 0; d < 3; ++d) w[e] += coframe[b][j] * coframe[d][i] * g[e][d][b];
        }
      }
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t e = 0; e < 3; ++e) out[k][i][j] += m[k][e] * w[e];
      }
    }
  }
  return out;
}

std::vector<Check> chart_checks(const Pencil& pencil, const Frame& frame, const PencilConnection& conn) {
  Christoffel gm = chart_christoffel(frame, conn);
  std::vector<Check> out;

  Check sym{"chart Christoffel symbols symmetric", true, ""};
  for (std::size_t k = 0; k < 3 && sym.passed; ++k) {
    for (std::size_t i = 0; i < 3 && sym.passed; ++i) {
      for (std::size_t j = i + 1; j < 3 && sym.passed; ++j) {
        RatExpr t = gm[k][i][j] - gm[k][j][i];
        if (!t.is_zero()) {
          sym.passed = false;
          sym.detail = "torsion component " + t.to_string();
        }
      }
    }
  }
  out.push_back(sym);

  auto parallel = [&](const char* name, const PoissonTensor& t) {
    Check c{name, true, ""};
    for (std::size_t i = 0; i < 3 && c.passed; ++i) {
      for (std::size_t j = 0; j < 3 && c.passed; ++j) {
        for (std::size_t k = j + 1; k < 3 && c.passed; ++k) {
          RatExpr v = t.component(j, k).diff(i);
          for (std::size_t l = 0; l < 3; ++l) {
            v += gm[j][i][l] * t.component(l, k) + gm[k][i][l] * t.component(j, l);
          }
          if (!v.is_zero()) {
            c.passed = false;
            c.detail = "component " + v.to_string();
          }
        }
      }
    }
    return c;
  };
  out.push_back(parallel("nabla P = 0", pencil.p()));
  out.push_back(parallel("nabla Q = 0", pencil.q()));
  return out;
}

TheoremReport verify_theorem(const Pencil& pencil, const Frame& frame, Gauge gauge) {
  FrameReport fr = verify_frame(pencil, frame);
  if (!fr.ok()) throw MathError("frame does not match the pencil");
  PencilConnection conn = solve_connection(frame, *fr.decomposition, gauge);
  RicciResult ric = ricci(frame, conn);
  std::vector<Check> chart = chart_checks(pencil, frame, conn);
  TwoForm predicted = ric.alt.scaled(-4);
  TheoremReport r{std::move(fr), std::move(conn), std::move(ric), std::move(chart), curvature(pencil), predicted};
  r.equal = r.curvature == r.predicted;
  return r;
}

}  // namespace ppk
