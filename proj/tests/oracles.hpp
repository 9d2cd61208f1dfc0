#pragma once

// Slow reference implementations used only by the test suite.  Each one
// takes a different route than the library code: residuals go through
// the adjunction by brute force over all upper sets, the product over
// pairs, and filter generation intersects every closed candidate.
// Agreement between the routes is what the tests assert.

#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/types.hpp"

namespace qbforge::oracle {

inline Mask oracle_full(const FiniteAlgebra& a) {
  return (Mask{1} << a.size()) - 1;
}

inline bool oracle_is_upper(const FiniteAlgebra& a, Mask s) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (has_bit(s, x) && a.leq(x, y) && !has_bit(s, y)) return false;
  return true;
}

inline std::vector<Mask> oracle_all_upper(const FiniteAlgebra& a) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= oracle_full(a); ++s)
    if (oracle_is_upper(a, s)) out.push_back(s);
  return out;
}

// X*Y as a literal comprehension over membership pairs.
inline Mask oracle_umul(const FiniteAlgebra& a, Mask x, Mask y) {
  Mask out = 0;
  for (int e = 0; e < a.size(); ++e)
    for (int f = 0; f < a.size(); ++f)
      if (has_bit(y, f) && has_bit(x, a.to(f, e))) out |= bit(e);
  return out;
}

// X*Y through the multiplication table, for residuated algebras.
inline Mask oracle_umul_product(const FiniteAlgebra& a, Mask x, Mask y) {
  Mask out = 0;
  for (int e = 0; e < a.size(); ++e)
    for (int f = 0; f < a.size(); ++f)
      if (has_bit(x, e) && has_bit(y, f))
        for (int g = 0; g < a.size(); ++g)
          if (a.leq(a.mul(e, f), g)) out |= bit(g);
  return out;
}

// X ~> Z as the largest upper Y with X*Y inside Z.
inline Mask oracle_ures_l(const FiniteAlgebra& a, Mask x, Mask z) {
  Mask out = 0;
  for (Mask y : oracle_all_upper(a))
    if ((oracle_umul(a, x, y) & ~z) == 0) out |= y;
  return out;
}

// Y -> Z as the largest upper X with X*Y inside Z.
inline Mask oracle_ures_r(const FiniteAlgebra& a, Mask y, Mask z) {
  Mask out = 0;
  for (Mask x : oracle_all_upper(a))
    if ((oracle_umul(a, x, y) & ~z) == 0) out |= x;
  return out;
}

inline Mask oracle_inv_res(const FiniteAlgebra& a, Mask lhs, Mask rhs,
                           bool mul_on_left) {
  Mask acc = oracle_full(a);
  for (Mask x : oracle_all_upper(a)) {
    Mask prod = mul_on_left ? oracle_umul(a, x, lhs) : oracle_umul(a, lhs, x);
    if ((rhs & ~prod) == 0) acc &= x;
  }
  return acc;
}

// Filters as upper sets closed under the arrow rule.
inline bool oracle_is_filter(const FiniteAlgebra& a, Mask f) {
  if (f == 0 || !oracle_is_upper(a, f)) return false;
  for (int y = 0; y < a.size(); ++y)
    for (int z = 0; z < a.size(); ++z)
      if (has_bit(f, y) && has_bit(f, a.to(y, z)) && !has_bit(f, z))
        return false;
  return true;
}

// Least filter containing s, by intersecting every candidate.
inline Mask oracle_generated_filter(const FiniteAlgebra& a, Mask s) {
  Mask acc = oracle_full(a);
  for (Mask f = 0; f <= oracle_full(a); ++f)
    if ((s & ~f) == 0 && oracle_is_filter(a, f)) acc &= f;
  return acc;
}

}  // namespace qbforge::oracle
