#pragma once

// Hand-built algebras shared across the test files.

#include <string>
#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/catalog.hpp"

namespace qbforge::fixtures {

// Goedel tables over a corrupted order: breaks the composition and
// exchange laws while keeping a valid poset.
inline FiniteAlgebra corrupted_g3() {
  FiniteAlgebra::Data d = catalog("godel:3").data();
  d.name = "corrupted";
  d.to[2 * 3 + 0] = 2;
  d.unit.reset();
  return FiniteAlgebra::create(std::move(d));
}

// two incomparable atoms under a shared unit, no bottom
inline FiniteAlgebra vee() {
  FiniteAlgebra::Data d;
  d.name = "vee";
  d.labels = {"s", "t", "1"};
  d.leq = {1, 0, 1, 0, 1, 1, 0, 0, 1};
  d.to = {2, 1, 2, 0, 2, 2, 0, 1, 2};
  d.lto = d.to;
  d.unit = 2;
  return FiniteAlgebra::create(std::move(d));
}

inline FiniteAlgebra chain4(const char* name, std::vector<int> mul) {
  std::vector<int> flat;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) flat.push_back(i <= j ? 1 : 0);
  Poset p = Poset::validate(4, flat);
  auto rs = residuals_from_mul(p, mul);
  if (!rs) throw Error("validation_failed", "chain4 table is not residuated");
  FiniteAlgebra::Data d;
  d.name = name;
  d.labels = {"0", "a", "b", "1"};
  d.leq = flat;
  for (auto& row : rs->first) d.to.push_back(row);
  for (auto& row : rs->second) d.lto.push_back(row);
  d.mul = std::move(mul);
  d.unit = 3;
  d.bottom = 0;
  return FiniteAlgebra::create(std::move(d));
}

// 0 < a < b < 1 with a*a = a*b = 0 but b*a = a: integral, residuated,
// and genuinely one-sided
inline FiniteAlgebra nc4() {
  return chain4("nc4", {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 2, 0, 1, 2, 3});
}

inline FiniteAlgebra nc4_opposite() {
  return chain4("nc4op", {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 2, 2, 0, 1, 2, 3});
}

// distributive lattice read as a Heyting algebra, from the order alone
inline FiniteAlgebra heyting_from_order(const char* name, int n,
                                        std::vector<int> leq,
                                        std::vector<std::string> labels) {
  Poset p = Poset::validate(n, leq);
  std::vector<int> mul(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.meet(x, y);
      if (!m) throw Error("validation_failed", "order has no meets");
      mul[x * n + y] = *m;
    }
  auto rs = residuals_from_mul(p, mul);
  if (!rs) throw Error("validation_failed", "order is not residuated");
  FiniteAlgebra::Data d;
  d.name = name;
  d.labels = std::move(labels);
  d.leq = std::move(leq);
  for (auto& row : rs->first) d.to.push_back(row);
  for (auto& row : rs->second) d.lto.push_back(row);
  d.mul = std::move(mul);
  d.unit = *p.top();
  d.bottom = *p.bottom();
  return FiniteAlgebra::create(std::move(d));
}

// the four-element square with an extra bottom glued underneath
inline FiniteAlgebra bottomed_p4() {
  std::vector<int> leq = {
      1, 1, 1, 1, 1,
      0, 1, 1, 1, 1,
      0, 0, 1, 0, 1,
      0, 0, 0, 1, 1,
      0, 0, 0, 0, 1};
  return heyting_from_order("bp4", 5, std::move(leq),
                            {"B", "o", "p", "q", "1"});
}

}  // namespace qbforge::fixtures
