#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/report.hpp"
#include "qbforge/types.hpp"

namespace qbforge {

// The complete lattice of upper sets of an algebra, with the quantale
// multiplication X*Y = {a | some y in Y has (y -> a) in X} and its two
// residuals.  Operations work on single sets without materializing the
// whole lattice; only the law suites enumerate it.

UpperSet upper_closure(const FiniteAlgebra& a, Mask s);
UpperSet up(const FiniteAlgebra& a, int x);
UpperSet full_set(const FiniteAlgebra& a);

/// Quantale product.  Precondition: a is a quantum B-algebra and both
/// arguments are upper.  On residuated algebras the product formula
/// {z | some x in X, y in Y have x*y <= z} is evaluated as well and a
/// disagreement throws oracle_mismatch.
UpperSet umul(const FiniteAlgebra& a, UpperSet x, UpperSet y);

/// X ~> Z, the right residual of left multiplication by X.
UpperSet ures_l(const FiniteAlgebra& a, UpperSet x, UpperSet z);

/// Y -> Z, the right residual of right multiplication by Y.
UpperSet ures_r(const FiniteAlgebra& a, UpperSet y, UpperSet z);

enum class InvResSide {
  left,   // meet of all X with X*a >= b
  right,  // meet of all X with a*X >= b
};

/// Inverse residual, computed by direct scan over all upper sets.
UpperSet inv_res(const FiniteAlgebra& a, UpperSet lhs, UpperSet rhs,
                 InvResSide side);

std::size_t count_upper_sets(const FiniteAlgebra& a);

/// All upper sets, ascending by cardinality then bitmask.  Throws
/// cap_exceeded when there would be more than cap of them.
std::vector<UpperSet> enumerate_upper_sets(
    const FiniteAlgebra& a, std::size_t cap = kDefaultUpperSetCap);

/// Enumerated lattice with a mask index, shared by the law suites.
struct UEnv {
  std::vector<UpperSet> sets;
  std::vector<int> index_of;  // 1 << n entries, -1 for non upper masks

  int index(UpperSet s) const { return index_of[s.bits]; }
};

UEnv build_uenv(const FiniteAlgebra& a,
                std::size_t cap = kDefaultUpperSetCap);

/// Associativity, union distribution, the five residual identities and
/// the adjunction, exhaustively when the lattice fits below cap and on
/// seeded random triples otherwise.  Law ids: umul_assoc, umul_empty,
/// umul_union_left, umul_union_right, res_swap, res_to_curry,
/// res_lto_curry, res_to_meet, res_lto_meet, adjunction, unit_upper
/// (the last only on integral algebras).
ClassReport check_quantale_laws(const FiniteAlgebra& a,
                                std::size_t cap = kDefaultUpperSetCap,
                                std::uint64_t seed = 0);

/// c is non-empty and c <= X union Y forces c <= X or c <= Y.  The
/// binary case decides the general one in a finite lattice.
bool is_supercompact(const FiniteAlgebra& a, UpperSet c,
                     std::size_t cap = kDefaultUpperSetCap);

/// c is non-empty, multiplication by c distributes over binary
/// intersections on both sides, and c*A = A = A*c (the empty meet).
bool is_balanced(const FiniteAlgebra& a, UpperSet c,
                 std::size_t cap = kDefaultUpperSetCap);

/// Coclosure plus the multiplicative law for an endo-map of U(A), over
/// the full enumeration.  Law ids: monotone, deflationary, idempotent,
/// mul_law, fixed_union_closed, fixed_mul_closed.
ClassReport check_conucleus(const FiniteAlgebra& a, const UEnv& env,
                            const std::function<UpperSet(UpperSet)>& g);

std::vector<UpperSet> fixed_points(const UEnv& env,
                                   const std::function<UpperSet(UpperSet)>& g);

}  // namespace qbforge
