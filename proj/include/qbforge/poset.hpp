#pragma once

#include <optional>
#include <vector>

#include "qbforge/types.hpp"

namespace qbforge {

/// Finite poset on {0, ..., n-1} with the order kept both as a dense
/// incidence table and as per-element up/down bitmask rows.
class Poset {
 public:
  /// Validates reflexivity, antisymmetry and transitivity of `leq`
  /// (row-major n*n, leq[x*n+y] != 0 meaning x <= y).  Throws Error with
  /// code not_reflexive / not_antisymmetric / not_transitive carrying the
  /// lexicographically least witness in the message.
  static Poset validate(int n, const std::vector<int>& leq);

  int size() const { return n_; }
  bool leq(int x, int y) const { return has_bit(up_[x], y); }

  /// All y with x <= y, as a bitmask.
  Mask up_mask(int x) const { return up_[x]; }
  /// All y with y <= x, as a bitmask.
  Mask dn_mask(int x) const { return dn_[x]; }

  bool is_upper(Mask s) const;
  Mask upper_closure(Mask s) const;

  /// Least upper bound if it exists.
  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;
  std::optional<int> top() const;
  std::optional<int> bottom() const;

  /// Least element of a nonempty subset if the subset has one.
  std::optional<int> least_of(Mask s) const;

 private:
  Poset(int n, std::vector<Mask> up, std::vector<Mask> dn)
      : n_(n), up_(std::move(up)), dn_(std::move(dn)) {}

  int n_;
  std::vector<Mask> up_;
  std::vector<Mask> dn_;
};

}  // namespace qbforge
