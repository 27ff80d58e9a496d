#pragma once

#include <string>

namespace ppk {

/// One named verification step of a report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

}  // namespace ppk
