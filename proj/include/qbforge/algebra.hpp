#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbforge/poset.hpp"
#include "qbforge/report.hpp"
#include "qbforge/types.hpp"

namespace qbforge {

/// A finite ordered algebra: poset plus implication tables, with an
/// optional product table and optional distinguished unit and bottom.
/// Immutable after create(); copies share the lazily computed caches.
class FiniteAlgebra {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> labels;      // size n, unique tokens
    std::vector<int> leq;                 // n*n row major, nonzero = leq
    std::vector<int> to;                  // to[x*n+y] houses x -> y
    std::vector<int> lto;                 // lto[x*n+y] houses the dual arrow
    std::optional<std::vector<int>> mul;  // product table if present
    std::optional<int> unit;
    std::optional<int> bottom;
  };

  /// Structural validation only: poset laws, table entry ranges, label
  /// uniqueness, and agreement of declared unit/bottom with inference.
  /// Class laws are checked separately so that broken tables can still
  /// be loaded and diagnosed.
  static FiniteAlgebra create(Data d);

  int size() const { return n_; }
  const std::string& name() const { return data_.name; }
  const std::vector<std::string>& labels() const { return data_.labels; }
  const std::string& label(int x) const { return data_.labels[x]; }
  const Data& data() const { return data_; }
  const Poset& order() const { return order_; }

  bool leq(int x, int y) const { return order_.leq(x, y); }
  int to(int x, int y) const { return data_.to[x * n_ + y]; }
  int lto(int x, int y) const { return data_.lto[x * n_ + y]; }
  bool has_mul() const { return data_.mul.has_value(); }
  int mul(int x, int y) const { return (*data_.mul)[x * n_ + y]; }

  /// Elements u with u->x = u~>x = x for all x.
  Mask unit_candidates() const { return unit_candidates_; }
  /// Declared unit, else the unique candidate, else nullopt.
  std::optional<int> unit() const;
  std::optional<int> top() const { return order_.top(); }
  std::optional<int> bottom() const;

  /// Lazily cached bound tables; -1 marks a missing bound.
  const std::vector<int>& join_table() const;
  const std::vector<int>& meet_table() const;

  // cached verdicts of the corresponding check_* reports
  bool is_quantum_b() const;
  bool is_residuated() const;
  bool is_pseudo_hoop() const;

 private:
  struct Cache;
  FiniteAlgebra(Data d, Poset order, Mask unit_candidates);

  Data data_;
  Poset order_;
  int n_;
  Mask unit_candidates_;
  std::shared_ptr<Cache> cache_;
};

/// The four quantum B-algebra laws, scanned over all triples.  Law ids:
/// to_composition, lto_composition, to_isotone, exchange.
ClassReport check_quantum_b(const FiniteAlgebra& a);

/// The unique unit element if one exists.  Throws multiple_units when two
/// candidates exist, which signals corrupt tables.
std::optional<int> check_unital(const FiniteAlgebra& a);

/// True iff the algebra is unital and the unit is the top element.
bool check_integral(const FiniteAlgebra& a);

/// Residuated poset laws.  Law ids: mul_assoc, mul_isotone, residuation.
ClassReport check_residuated(const FiniteAlgebra& a);

/// x*y <= x and x*y <= y for all pairs.
bool check_two_sided(const FiniteAlgebra& a);

/// All binary joins exist.
bool check_join_semilattice(const FiniteAlgebra& a);

/// Join of two elements; throws join_missing when there is none.
int join(const FiniteAlgebra& a, int x, int y);

/// Meet of two elements; throws join_missing with a meet witness.
int meet(const FiniteAlgebra& a, int x, int y);

/// True iff the only common upper bound of x and y is the top element.
/// For a pair whose join exists this says exactly join(x,y) = 1, and it
/// stays well defined on algebras without a join operation.
bool join_is_one(const FiniteAlgebra& a, int x, int y);

/// Pseudo-hoop laws.  Law ids: unit, self_residual, curry_to, curry_lto,
/// divisibility, meet_form, order_match.
ClassReport check_pseudo_hoop(const FiniteAlgebra& a);

/// Extra hoop properties in one report.  Law ids: bounded, prelinearity,
/// cancellative, pseudo_bl, pseudo_mv.  Precondition: pseudo-hoop.
ClassReport check_extras(const FiniteAlgebra& a);

struct MtlFlags {
  bool to_mtl = false;
  bool lto_mtl = false;
  bool pseudo_mtl = false;
};

/// Prelinearity per arrow kind; pseudo_mtl is their conjunction.
MtlFlags check_mtl(const FiniteAlgebra& a);

/// Residual tables recovered from a product table over a poset, when the
/// defining maxima exist: to[y][z] = max{x | x*y <= z} and
/// lto[x][z] = max{y | x*y <= z}.  Returns nullopt when some maximum is
/// missing, in which case the product is not residuated over this order.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
residuals_from_mul(const Poset& order, const std::vector<int>& mul);

}  // namespace qbforge
