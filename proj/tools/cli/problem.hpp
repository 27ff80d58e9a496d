#pragma once

// Problem files: JSON documents with a "kind", the chart "variables", and
// kind-specific blocks whose expressions are strings in the expression grammar.
//
//   pencil         P, Q: {"xy", "yz", "zx"} brackets
//   linear_pencil  brackets: linear {"xy", "yz", "zx"}; cocycle: {"xy", "yz", "zx"}
//                  constants, or frozen: [xi_x, xi_y, xi_z]
//   lie_pencil     P, Q: linear bracket blocks
//   web            variables (u, v); f1, f2, f3; optional origin and ladder
//   reduction      pencil blocks plus casimirs: {"f", "g", "h"}
//   connection     pencil blocks plus frame: {"X", "Y", "Z"} component triples
//
// "points" is an optional list of points (rational literals as strings) and
// "options" may carry "numeric_check" and "step".

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppk/algebra.hpp"
#include "ppk/connection.hpp"
#include "ppk/web.hpp"

namespace ppk::cli {

struct Problem {
  std::string kind;
  Vars vars;
  nlohmann::json doc;
};

/// Throws InputError for unreadable files, malformed JSON, unknown kinds and
/// missing fields.
Problem load_problem(const std::filesystem::path& path);
Problem parse_problem(const std::string& text);

/// "1,-1/2,0" -> rational point of the given dimension.
Point parse_point(const std::string& text, std::size_t dim);

std::vector<Point> points(const Problem& pr);
std::optional<bool> numeric_check_option(const Problem& pr);
std::optional<double> step_option(const Problem& pr);

PoissonTensor tensor(const Problem& pr, const char* key);
LieStructure structure(const Problem& pr, const char* key);
Cocycle cocycle(const Problem& pr, const LieStructure& g);
LiePencilDef lie_def(const Problem& pr);

/// Validated pencil for any kind that carries one.
Pencil pencil(const Problem& pr);
/// Same data without the Poisson/compatibility validation.
Pencil pencil_unchecked(const Problem& pr);

Web3 web(const Problem& pr);
CasimirTriple casimirs(const Problem& pr);
Frame frame(const Problem& pr);

}  // namespace ppk::cli
