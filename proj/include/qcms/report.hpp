#pragma once

#include <string>
#include <vector>

namespace qcms {

// One named pass/fail check with free-form supporting detail.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A batch of checks run under one heading (one suite, one genus).
struct Report {
  std::string suite;
  int genus = 0;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace qcms
