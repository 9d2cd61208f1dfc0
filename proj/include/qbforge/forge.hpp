#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/poset.hpp"

namespace qbforge {

enum class TargetClass {
  integral_qb,
  integral_residuated,
  integral_residuated_vee,
  pseudo_hoop,
  two_sided_residuated_vee,
};

const char* class_name(TargetClass t);
TargetClass class_by_name(const std::string& name);  // throws unknown_class

/// Full membership test for a target class.  This is the oracle; the
/// enumerator's pruning is only an accelerator and every emitted
/// algebra has passed this check.
bool in_class(TargetClass t, const FiniteAlgebra& a);

struct SearchSpec {
  int max_size = 3;
  TargetClass target = TargetClass::integral_residuated;
  std::string predicate = "true";
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool dedup = true;
  // With pruning off the search walks the raw table space and rejects
  // only at the leaves.  The member stream is identical either way;
  // the flag exists so tests can hold the fast path to that promise.
  bool pruned = true;
};

struct SearchStats {
  std::uint64_t posets = 0;   // orders scanned
  std::uint64_t leaves = 0;   // completed tables handed to the oracle
  std::uint64_t members = 0;  // tables the oracle accepted
  std::uint64_t emitted = 0;  // members surviving dedup, predicate, limit
};

/// Every partial order on n labeled points, in odometer order over the
/// strict pair states.  Dimensioned for n <= 5.
std::vector<Poset> enumerate_posets(int n);
std::vector<Poset> enumerate_posets_upto_iso(int n);

/// Least serialized form of the tables over all relabelings; equal keys
/// mean isomorphic structures.
std::string canonical_key(const FiniteAlgebra& a);
std::string canonical_key(const Poset& p);

/// Streams every class member of size 1..max_size in deterministic
/// order (size, then poset, then table entries lexicographically).
/// Dedup, predicate and limit are not applied here; the callback
/// returns false to stop early.
void for_each_member(const SearchSpec& spec,
                     const std::function<bool(const FiniteAlgebra&)>& fn,
                     SearchStats* stats = nullptr);

/// The member stream materialized, deduped per spec.dedup and cut at
/// spec.limit.
std::vector<FiniteAlgebra> enumerate_algebras(const SearchSpec& spec,
                                              SearchStats* stats = nullptr);

using Predicate = std::function<bool(const FiniteAlgebra&)>;

/// Named properties for counterexample hunting.  A predicate answers
/// "is this algebra a witness"; names that presuppose structure the
/// algebra lacks answer no instead of throwing.
const std::vector<std::string>& predicate_names();
Predicate predicate_by_name(const std::string& name);  // throws unknown_predicate

struct SearchOutcome {
  std::vector<FiniteAlgebra> witnesses;
  SearchStats stats;
};

/// enumerate_algebras filtered through the named predicate; spec.limit
/// caps the witness list.
SearchOutcome find_counterexamples(const SearchSpec& spec);

}  // namespace qbforge
