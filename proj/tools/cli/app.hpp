#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ppk::cli {

/// Ordered key/value lines. Text output prints `key: value`, JSON output an
/// object with the same keys in the same order.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
};

enum class Format { text, json };

void render(const Report& r, Format f, std::ostream& out);

/// Entry point shared by main() and the tests. Exit codes: 0 success,
/// 1 mathematical failure or mismatch, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppk::cli
