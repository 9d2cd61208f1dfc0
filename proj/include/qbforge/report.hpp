#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qbforge/types.hpp"

namespace qbforge {

/// One concrete witness that a named law fails.  `elems` hold carrier
/// indices, `sets` hold upper sets, in the order the law quantifies them.
struct Violation {
  std::string law;
  std::vector<int> elems;
  std::vector<UpperSet> sets;
};

/// Outcome of checking one axiom bundle.  Checks record at most one
/// violation per law id, the lexicographically least witness, so reports
/// are deterministic across runs.
struct ClassReport {
  std::string class_name;
  bool holds = true;
  std::vector<Violation> violations;

  bool law_holds(std::string_view law) const {
    for (const auto& v : violations)
      if (v.law == law) return false;
    return true;
  }

  const Violation* find(std::string_view law) const {
    for (const auto& v : violations)
      if (v.law == law) return &v;
    return nullptr;
  }

  void add(std::string law, std::vector<int> elems = {},
           std::vector<UpperSet> sets = {}) {
    holds = false;
    for (const auto& v : violations)
      if (v.law == law) return;  // keep the first (lex least) witness
    violations.push_back({std::move(law), std::move(elems), std::move(sets)});
  }

  void merge(const ClassReport& o) {
    for (const auto& v : o.violations) {
      holds = false;
      bool seen = false;
      for (const auto& mine : violations)
        if (mine.law == v.law) { seen = true; break; }
      if (!seen) violations.push_back(v);
    }
  }
};

}  // namespace qbforge
