#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/filters.hpp"
#include "qbforge/report.hpp"
#include "qbforge/types.hpp"

namespace qbforge {

// Elementwise images of raw subsets, no upward closure.
Mask lifted_mul(const FiniteAlgebra& a, Mask x, Mask y);
Mask lifted_to(const FiniteAlgebra& a, Mask x, Mask y);
Mask lifted_lto(const FiniteAlgebra& a, Mask x, Mask y);

/// The set of elements whose only common upper bound with every member
/// of base is the unit.  Construction re-verifies filterhood and the
/// closure identities; a failure throws theorem_violation.
struct Polar {
  Mask base;
  Filter polar_set;
};

Polar polar(const FiniteAlgebra& a, Mask m);

/// Antitonicity, double-polar extensivity, triple-polar collapse and
/// filterhood over every subset.  Law ids: polar_filter, antitone,
/// double_contains, triple_collapse.
ClassReport polar_laws(const FiniteAlgebra& a);

/// For every pair whose only common upper bound is the unit: products
/// collapse to the meet on both sides and the arrows collapse to the
/// other element.  Law ids: coprime_mul, coprime_arrow.
ClassReport coprime_laws(const FiniteAlgebra& a);

/// The pairing (x, y) -> x meet y on polar(m) x polar(polar(m)), with
/// its verification.  Law ids: injective, component_closed, hom_mul,
/// hom_to, hom_lto, image_matches_product.
struct PairEmbedding {
  Polar left;
  Polar right;
  std::vector<std::pair<int, int>> domain;
  std::vector<int> value;  // meet of the pair, indexed like domain
  Mask image;
  ClassReport report;
};

PairEmbedding polar_embedding(const FiniteAlgebra& a, Mask m);

/// Upper bounds of x inside F, with the least one when it exists.
/// Computed directly and as the restriction of the upper-bound set to
/// F; the two routes must agree.
struct NuResult {
  UpperSet bounds;
  std::optional<int> least;
};

NuResult nu(const FiniteAlgebra& a, const Filter& f, Mask x);

/// Filterhood of the bound sets of the two arrow images, the product
/// absorption identities behind them, and existence plus idempotency
/// of the least bound for singletons.  Law ids: to_filter, lto_filter,
/// to_absorption, lto_absorption, nuhat_to, nuhat_lto.
ClassReport nu_filter_theorem(const FiniteAlgebra& a, const Filter& f,
                              Mask x);

/// Membership of the two arrows agrees for every pair.
bool is_normal_filter(const FiniteAlgebra& a, const Filter& f);

/// Every filter with a least element a: a is idempotent, commutes with
/// everything, and the filter is normal.  In a finite pseudo-hoop every
/// filter qualifies.  Law ids: least_exists, least_idempotent,
/// least_central, least_normal.
ClassReport least_element_normal(const FiniteAlgebra& a);

/// A reducibility witness: an idempotent outside both polars whose
/// meet decomposition generates two normal filters meeting in the
/// unit.  Returns nothing when no element qualifies; a qualifying
/// element that fails any verified step throws decomposition_failed.
struct SubdirectWitness {
  int x;   // element outside the polar product with a least bound
  int y;   // the idempotent built from it
  int y1;  // left component of the meet decomposition
  int y2;  // right component
  Filter f1;
  Filter f2;
};

std::optional<SubdirectWitness> subdirect_witness(const FiniteAlgebra& a,
                                                  Mask m);

}  // namespace qbforge
