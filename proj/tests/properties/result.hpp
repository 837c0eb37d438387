#pragma once

#include <string>

namespace tsurf::testing {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // largest residual seen, for numeric properties
  std::string first_failure;

  bool ok() const { return failures == 0 && trials > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

}  // namespace tsurf::testing
