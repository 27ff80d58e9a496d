#include "problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ppk/error.hpp"
#include "ppk/parser.hpp"

namespace ppk::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kinds{"pencil", "linear_pencil", "lie_pencil", "web", "reduction", "connection"};

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

std::string text_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(where + ": expected an expression string");
}

RatExpr expr(const Problem& pr, const json& v, const std::string& where) {
  std::string s = text_of(v, where);
  try {
    return parse(s, pr.vars);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const DivisionByZero& e) {
    throw InputError(where + ": " + e.what());
  }
}

Rational rational(const json& v, const std::string& where) {
  try {
    return parse_rational(text_of(v, where));
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const DivisionByZero& e) {
    throw InputError(where + ": " + e.what());
  }
}

RVec3 linear_coefficients(const Problem& pr, const json& v, const std::string& where) {
  RatExpr e = expr(pr, v, where);
  if (!e.is_polynomial() || e.num().total_degree() > 1 || e.eval(Point(3, Rational(0))) != 0) {
    throw InputError(where + ": bracket must be a linear form in the variables");
  }
  return {e.diff(0).constant_value(), e.diff(1).constant_value(), e.diff(2).constant_value()};
}

// Linear tensor of possibly broken structure constants, for reporting.
PoissonTensor linear_tensor(const LieStructure& g, const Vars& vars) {
  auto lin = [&](const RVec3& c) {
    RatExpr out(vars);
    for (std::size_t k = 0; k < 3; ++k) out += RatExpr::variable(vars, k).scaled(c[k]);
    return out;
  };
  return PoissonTensor(lin(g.bracket(0, 1)), lin(g.bracket(1, 2)), lin(g.bracket(2, 0)));
}

Problem from_json(json doc) {
  Problem pr;
  pr.kind = text_of(field(doc, "kind", "problem"), "kind");
  if (std::find(kinds.begin(), kinds.end(), pr.kind) == kinds.end()) {
    throw InputError("unknown problem kind \"" + pr.kind + "\"");
  }
  const json& vs = field(doc, "variables", "problem");
  if (!vs.is_array()) throw InputError("variables: expected a list of names");
  std::vector<std::string> names;
  for (const auto& n : vs) names.push_back(text_of(n, "variables"));
  std::size_t want = pr.kind == "web" ? 2 : 3;
  if (names.size() != want) {
    throw InputError("variables: kind " + pr.kind + " needs " + std::to_string(want) + " names");
  }
  pr.vars = make_vars(std::move(names));
  pr.doc = std::move(doc);
  return pr;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
  return from_json(std::move(doc));
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

Point parse_point(const std::string& text, std::size_t dim) {
  Point p;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    p.push_back(rational(json(piece), "point"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (p.size() != dim) throw InputError("point \"" + text + "\" needs " + std::to_string(dim) + " coordinates");
  return p;
}

std::vector<Point> points(const Problem& pr) {
  std::vector<Point> out;
  if (!pr.doc.contains("points")) return out;
  for (const auto& pt : pr.doc.at("points")) {
    if (!pt.is_array() || pt.size() != pr.vars->size()) throw InputError("points: wrong dimension");
    Point p;
    for (const auto& c : pt) p.push_back(rational(c, "points"));
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<bool> numeric_check_option(const Problem& pr) {
  if (!pr.doc.contains("options") || !pr.doc.at("options").contains("numeric_check")) return std::nullopt;
  const json& v = pr.doc.at("options").at("numeric_check");
  if (!v.is_boolean()) throw InputError("options.numeric_check: expected true or false");
  return v.get<bool>();
}

std::optional<double> step_option(const Problem& pr) {
  if (!pr.doc.contains("options") || !pr.doc.at("options").contains("step")) return std::nullopt;
  const json& v = pr.doc.at("options").at("step");
  if (!v.is_number()) throw InputError("options.step: expected a number");
  return v.get<double>();
}

PoissonTensor tensor(const Problem& pr, const char* key) {
  const json& t = field(pr.doc, key, pr.kind);
  std::string w = std::string(key) + ".";
  return PoissonTensor(expr(pr, field(t, "xy", key), w + "xy"), expr(pr, field(t, "yz", key), w + "yz"),
                       expr(pr, field(t, "zx", key), w + "zx"));
}

LieStructure structure(const Problem& pr, const char* key) {
  const json& t = field(pr.doc, key, pr.kind);
  std::string w = std::string(key) + ".";
  return LieStructure::from_brackets(linear_coefficients(pr, field(t, "xy", key), w + "xy"),
                                     linear_coefficients(pr, field(t, "yz", key), w + "yz"),
                                     linear_coefficients(pr, field(t, "zx", key), w + "zx"));
}

Cocycle cocycle(const Problem& pr, const LieStructure& g) {
  if (pr.doc.contains("frozen")) {
    const json& xi = pr.doc.at("frozen");
    if (!xi.is_array() || xi.size() != 3) throw InputError("frozen: expected three coordinates");
    return frozen_argument(g, {rational(xi[0], "frozen"), rational(xi[1], "frozen"), rational(xi[2], "frozen")});
  }
  const json& c = field(pr.doc, "cocycle", pr.kind);
  return {rational(field(c, "xy", "cocycle"), "cocycle.xy"), rational(field(c, "yz", "cocycle"), "cocycle.yz"),
          rational(field(c, "zx", "cocycle"), "cocycle.zx")};
}

LiePencilDef lie_def(const Problem& pr) { return {structure(pr, "P"), structure(pr, "Q")}; }

Pencil pencil(const Problem& pr) {
  if (pr.kind == "linear_pencil") {
    LieStructure g = structure(pr, "brackets");
    return linear_pencil(g, cocycle(pr, g), pr.vars);
  }
  if (pr.kind == "lie_pencil") return lie_pencil(lie_def(pr), pr.vars);
  if (pr.kind == "web") throw InputError("a web file does not define a pencil");
  return Pencil(tensor(pr, "P"), tensor(pr, "Q"));
}

Pencil pencil_unchecked(const Problem& pr) {
  if (pr.kind == "linear_pencil") {
    LieStructure g = structure(pr, "brackets");
    Cocycle a = cocycle(pr, g);
    return Pencil::unchecked(linear_tensor(g, pr.vars), constant_tensor(a, pr.vars));
  }
  if (pr.kind == "lie_pencil") {
    LiePencilDef d = lie_def(pr);
    return Pencil::unchecked(linear_tensor(d.p, pr.vars), linear_tensor(d.q, pr.vars));
  }
  if (pr.kind == "web") throw InputError("a web file does not define a pencil");
  return Pencil::unchecked(tensor(pr, "P"), tensor(pr, "Q"));
}

Web3 web(const Problem& pr) {
  if (pr.kind != "web") throw InputError("expected a web file");
  return {expr(pr, field(pr.doc, "f1", "web"), "f1"), expr(pr, field(pr.doc, "f2", "web"), "f2"),
          expr(pr, field(pr.doc, "f3", "web"), "f3")};
}

CasimirTriple casimirs(const Problem& pr) {
  const json& c = field(pr.doc, "casimirs", pr.kind);
  return {expr(pr, field(c, "f", "casimirs"), "casimirs.f"), expr(pr, field(c, "g", "casimirs"), "casimirs.g"),
          expr(pr, field(c, "h", "casimirs"), "casimirs.h")};
}

Frame frame(const Problem& pr) {
  const json& f = field(pr.doc, "frame", pr.kind);
  auto vec = [&](const char* key) {
    const json& v = field(f, key, "frame");
    if (!v.is_array() || v.size() != 3) throw InputError(std::string("frame.") + key + ": expected three components");
    std::string w = std::string("frame.") + key;
    return VectorField{{expr(pr, v[0], w), expr(pr, v[1], w), expr(pr, v[2], w)}};
  };
  return {vec("X"), vec("Y"), vec("Z")};
}

}  // namespace ppk::cli
