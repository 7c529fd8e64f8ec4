#pragma once

#include <string>
#include <vector>

namespace f1hall {

// Result of a verification suite: one line per checked property, with a
// failure witness when something broke.  Failures are report content, not
// exceptions.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
};

}  // namespace f1hall
