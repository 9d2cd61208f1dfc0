#pragma once

#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/filters.hpp"
#include "qbforge/report.hpp"

namespace qbforge {

/// Primeness flags for one filter of an integral residuated
/// join-semilattice.
///   to_prime   x -> y or y -> x lands in the filter, for every pair
///   lto_prime  the same with ~>
///   vee_prime  x v y in the filter forces x or y into it
/// `prime` is the conjunction of the two arrow flags by definition.
/// Properness is not required; the whole carrier passes every flag.
struct PrimeClassification {
  Filter filter;
  bool to_prime = false;
  bool lto_prime = false;
  bool vee_prime = false;
  bool prime = false;
};

PrimeClassification classify_filter(const FiniteAlgebra& a, const Filter& f);

/// Classification of every filter, in all_filters order.
std::vector<PrimeClassification> classify_all(const FiniteAlgebra& a);

/// Containments between the four classes, scanned over every filter.
/// Law ids:
///   to_prime_vee    to-prime filters are join-prime
///   lto_prime_vee   lto-prime filters are join-prime
///   prime_vee       prime filters are join-prime
///   prime_both      prime coincides with to-prime and lto-prime jointly
ClassReport prime_class_inclusions(const FiniteAlgebra& a);

/// Maximal filter that contains f and avoids the element `avoid`, found
/// by greedy saturation with extend_filter in ascending element order.
/// The result is checked maximal (every further extension captures the
/// avoided element) and join-prime; either failure throws
/// theorem_violation, as neither can happen on a correct build.
/// Precondition: two-sided residuated join-semilattice, avoid outside f.
Filter prime_extension(const FiniteAlgebra& a, const Filter& f, int avoid);

/// Meets of the prime classes above one filter.  The join-prime meet is
/// asserted equal to the filter itself; the meet over prime filters can
/// land strictly higher and is only reported.
struct PrimeIntersection {
  Filter filter;      // the input
  Filter vee_meet;    // meet of the join-prime filters above it
  Filter prime_meet;  // meet of the prime filters above it
  bool vee_equal = false;
  bool prime_equal = false;
};

PrimeIntersection intersection_of_primes(const FiniteAlgebra& a,
                                         const Filter& f);

/// The three prelinearity biconditionals on an integral residuated
/// join-semilattice: each arrow is prelinear exactly when the matching
/// arrow-prime class coincides with the join-prime class.  Law ids:
/// to_mtl_iff, lto_mtl_iff, pseudo_mtl_iff.
ClassReport mtl_iff_theorem(const FiniteAlgebra& a);

/// Products distribute over binary joins in each argument.  Law ids:
/// mul_join_left, mul_join_right.  This is the numeric core of the
/// saturation argument behind prime_extension, split out as its own
/// diagnostic.
ClassReport join_distribution_laws(const FiniteAlgebra& a);

}  // namespace qbforge
