#pragma once

#include <functional>
#include <vector>

#include "qbforge/algebra.hpp"
#include "qbforge/quantale.hpp"
#include "qbforge/report.hpp"
#include "qbforge/types.hpp"

namespace qbforge {

struct Filter {
  UpperSet set;

  bool operator==(const Filter&) const = default;
};

struct FilterLattice {
  std::vector<Filter> filters;  // ascending by cardinality then bitmask

  bool contains(UpperSet s) const;
};

/// Non-empty upper set closed under the arrow rule.  Both readings of
/// the closure condition (F*F inside F, and the elementwise rule) are
/// evaluated and must agree.
bool is_filter(const FiniteAlgebra& a, UpperSet x);

/// Least filter containing the non-empty seed.  Fixpoint closure under
/// the arrow rule; on residuated algebras the finite-product formula is
/// evaluated independently and a disagreement throws oracle_mismatch.
Filter generated_filter(const FiniteAlgebra& a, Mask seed);

/// Least filter containing F and e, for two-sided residuated algebras
/// with e outside F.  Fixpoint route checked against the closure of the
/// alternating words x1*e*x2*e*...*e*xn with the xi drawn from F.
Filter extend_filter(const FiniteAlgebra& a, const Filter& f, int e);

/// Every filter, with pairwise non-empty intersections re-verified to
/// be filters.
FilterLattice all_filters(const FiniteAlgebra& a);

inline UpperSet mu(const Filter& f, UpperSet x) { return f.set & x; }

using MuFn = std::function<UpperSet(UpperSet, UpperSet)>;

/// The restriction suite over every filter F and upper set X of an
/// integral algebra.  Law ids:
///   L1  mu_F(X)*mu_F(Y) inside mu_F(X*Y)
///   L2  mu_F is a conucleus whose fixed points are the upper sets
///       inside F
///   P1  mu_F(X) = mu_{mu_F(X)*mu_F(X)}(X)
///   P2  the triple product collapses when 1 is in
///       mu_F(X) ~> (mu_F(X) -> X)
///   P3  mu_F(X) is a filter iff 1 is in mu_F(X) and in that residual
/// and, with Y = mu_F(X) -> X and Z = mu_F(X) ~> X whenever 1 is in X:
///   C1  mu_F(X)*mu_F(Z) = mu_F(X) = mu_F(Y)*mu_F(X)
///   C2  mu_F(Y) -> Y = Y
///   C3  mu_F(Z) ~> Z = Z
///   C4  Y*mu_F(Y) = Y
///   C5  mu_F(Z)*Z = Z
///   C6  mu_F(Y) is idempotent, and a filter when it contains 1
///   C7  the same for mu_F(Z)
ClassReport mu_law_suite(const FiniteAlgebra& a,
                         std::size_t cap = kDefaultUpperSetCap);

/// Same suite with a pluggable restriction map, so the harness can
/// demonstrate that a wrong map is caught.
ClassReport mu_law_suite_with(const FiniteAlgebra& a, std::size_t cap,
                              const MuFn& mu_fn);

}  // namespace qbforge
