#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string detail;  // first violation, empty when passed
};

/// An ordered list of named checks.
struct CheckList {
  std::vector<AxiomCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
  const AxiomCheck& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.axiom == name) return c;
    throw Error("no axiom named " + name);
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.axiom + ": " + c.detail;
    return "";
  }
};

}  // namespace hopfcalc
