#include "qbforge/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace qbforge {

struct FiniteAlgebra::Cache {
  std::once_flag join_once, meet_once, qb_once, res_once, hoop_once;
  std::vector<int> join_table, meet_table;
  bool quantum_b = false;
  bool residuated = false;
  bool pseudo_hoop = false;
};

FiniteAlgebra::FiniteAlgebra(Data d, Poset order, Mask unit_candidates)
    : data_(std::move(d)),
      order_(std::move(order)),
      n_(order_.size()),
      unit_candidates_(unit_candidates),
      cache_(std::make_shared<Cache>()) {}

namespace {

void check_table(const std::vector<int>& t, int n, const char* which) {
  if (t.size() != static_cast<std::size_t>(n) * n)
    throw Error("validation_failed", std::string(which) + " table is not n*n");
  for (int v : t)
    if (v < 0 || v >= n)
      throw Error("validation_failed",
                  std::string(which) + " entry " + std::to_string(v) +
                      " out of range");
}

}  // namespace

FiniteAlgebra FiniteAlgebra::create(Data d) {
  const int n = static_cast<int>(d.labels.size());
  if (n < 1 || n > kMaxCarrier)
    throw Error("cap_exceeded", "carrier size " + std::to_string(n) +
                                    " outside [1, " +
                                    std::to_string(kMaxCarrier) + "]");
  std::set<std::string> seen;
  for (const auto& l : d.labels) {
    if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos)
      throw Error("validation_failed", "label '" + l + "' is not a token");
    if (!seen.insert(l).second)
      throw Error("validation_failed", "duplicate label '" + l + "'");
  }

  Poset order = Poset::validate(n, d.leq);
  check_table(d.to, n, "to");
  check_table(d.lto, n, "lto");
  if (d.mul) check_table(*d.mul, n, "mul");

  Mask candidates = 0;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = d.to[u * n + x] == x && d.lto[u * n + x] == x;
    if (ok) candidates |= bit(u);
  }
  if (d.unit) {
    if (*d.unit < 0 || *d.unit >= n)
      throw Error("validation_failed", "unit index out of range");
    if (!has_bit(candidates, *d.unit))
      throw Error("validation_failed",
                  "declared unit " + d.labels[*d.unit] +
                      " does not satisfy u->x = u~>x = x");
  }
  if (d.bottom) {
    if (*d.bottom < 0 || *d.bottom >= n)
      throw Error("validation_failed", "bottom index out of range");
    auto least = order.bottom();
    if (!least || *least != *d.bottom)
      throw Error("validation_failed",
                  "declared bottom " + d.labels[*d.bottom] +
                      " is not the least element");
  }

  return FiniteAlgebra(std::move(d), std::move(order), candidates);
}

std::optional<int> FiniteAlgebra::unit() const {
  if (data_.unit) return data_.unit;
  if (popcount(unit_candidates_) == 1)
    return std::countr_zero(unit_candidates_);
  return std::nullopt;
}

std::optional<int> FiniteAlgebra::bottom() const {
  if (data_.bottom) return data_.bottom;
  return order_.bottom();
}

const std::vector<int>& FiniteAlgebra::join_table() const {
  std::call_once(cache_->join_once, [&] {
    cache_->join_table.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (auto j = order_.join(x, y)) cache_->join_table[x * n_ + y] = *j;
  });
  return cache_->join_table;
}

const std::vector<int>& FiniteAlgebra::meet_table() const {
  std::call_once(cache_->meet_once, [&] {
    cache_->meet_table.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (auto m = order_.meet(x, y)) cache_->meet_table[x * n_ + y] = *m;
  });
  return cache_->meet_table;
}

bool FiniteAlgebra::is_quantum_b() const {
  std::call_once(cache_->qb_once,
                 [&] { cache_->quantum_b = check_quantum_b(*this).holds; });
  return cache_->quantum_b;
}

bool FiniteAlgebra::is_residuated() const {
  std::call_once(cache_->res_once, [&] {
    cache_->residuated = has_mul() && check_residuated(*this).holds;
  });
  return cache_->residuated;
}

bool FiniteAlgebra::is_pseudo_hoop() const {
  std::call_once(cache_->hoop_once, [&] {
    cache_->pseudo_hoop = has_mul() && check_pseudo_hoop(*this).holds;
  });
  return cache_->pseudo_hoop;
}

ClassReport check_quantum_b(const FiniteAlgebra& a) {
  ClassReport r{"quantum-b", true, {}};
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!a.leq(a.to(y, z), a.to(a.to(x, y), a.to(x, z))))
          r.add("to_composition", {x, y, z});
        if (!a.leq(a.lto(y, z), a.lto(a.lto(x, y), a.lto(x, z))))
          r.add("lto_composition", {x, y, z});
        if (a.leq(y, z) && !a.leq(a.to(x, y), a.to(x, z)))
          r.add("to_isotone", {x, y, z});
        if (a.leq(x, a.to(y, z)) != a.leq(y, a.lto(x, z)))
          r.add("exchange", {x, y, z});
      }
  return r;
}

std::optional<int> check_unital(const FiniteAlgebra& a) {
  Mask c = a.unit_candidates();
  if (popcount(c) > 1) {
    int u1 = std::countr_zero(c);
    int u2 = std::countr_zero(c & ~bit(u1));
    throw Error("multiple_units",
                "(" + a.label(u1) + "," + a.label(u2) + ")");
  }
  if (c == 0) return std::nullopt;
  return std::countr_zero(c);
}

bool check_integral(const FiniteAlgebra& a) {
  auto u = check_unital(a);
  if (!u) return false;
  auto t = a.top();
  return t && *t == *u;
}

ClassReport check_residuated(const FiniteAlgebra& a) {
  if (!a.has_mul())
    throw Error("precondition", "check_residuated needs a product table");
  ClassReport r{"residuated", true, {}};
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)))
          r.add("mul_assoc", {x, y, z});
        if (a.leq(x, y) &&
            (!a.leq(a.mul(x, z), a.mul(y, z)) ||
             !a.leq(a.mul(z, x), a.mul(z, y))))
          r.add("mul_isotone", {x, y, z});
        const bool below = a.leq(a.mul(x, y), z);
        if (below != a.leq(x, a.to(y, z)) || below != a.leq(y, a.lto(x, z)))
          r.add("residuation", {x, y, z});
      }
  return r;
}

bool check_two_sided(const FiniteAlgebra& a) {
  if (!a.has_mul())
    throw Error("precondition", "check_two_sided needs a product table");
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!a.leq(a.mul(x, y), x) || !a.leq(a.mul(x, y), y)) return false;
  return true;
}

bool check_join_semilattice(const FiniteAlgebra& a) {
  const auto& jt = a.join_table();
  return std::find(jt.begin(), jt.end(), -1) == jt.end();
}

int join(const FiniteAlgebra& a, int x, int y) {
  int j = a.join_table()[x * a.size() + y];
  if (j < 0)
    throw Error("join_missing",
                "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return j;
}

int meet(const FiniteAlgebra& a, int x, int y) {
  int m = a.meet_table()[x * a.size() + y];
  if (m < 0)
    throw Error("join_missing",
                "meet (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return m;
}

bool join_is_one(const FiniteAlgebra& a, int x, int y) {
  auto t = a.top();
  if (!t) return false;
  return (a.order().up_mask(x) & a.order().up_mask(y)) == bit(*t);
}

ClassReport check_pseudo_hoop(const FiniteAlgebra& a) {
  if (!a.has_mul())
    throw Error("precondition", "check_pseudo_hoop needs a product table");
  ClassReport r{"pseudo-hoop", true, {}};
  auto u = a.unit();
  if (!u) u = a.top();
  if (!u) {
    r.add("unit");
    return r;
  }
  const int one = *u;
  const int n = a.size();
  const auto& mt = a.meet_table();
  for (int x = 0; x < n; ++x) {
    if (a.mul(x, one) != x || a.mul(one, x) != x) r.add("unit", {x});
    if (a.to(x, x) != one || a.lto(x, x) != one) r.add("self_residual", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int d1 = a.mul(a.to(x, y), x);
      const int d2 = a.mul(a.to(y, x), y);
      const int d3 = a.mul(x, a.lto(x, y));
      const int d4 = a.mul(y, a.lto(y, x));
      if (d1 != d2 || d1 != d3 || d1 != d4) r.add("divisibility", {x, y});
      if (mt[x * n + y] != d1 || mt[x * n + y] != d3)
        r.add("meet_form", {x, y});
      const bool le = a.leq(x, y);
      if (le != (a.to(x, y) == one) || le != (a.lto(x, y) == one))
        r.add("order_match", {x, y});
      for (int z = 0; z < n; ++z) {
        if (a.to(a.mul(x, y), z) != a.to(x, a.to(y, z)))
          r.add("curry_to", {x, y, z});
        if (a.lto(a.mul(x, y), z) != a.lto(y, a.lto(x, z)))
          r.add("curry_lto", {x, y, z});
      }
    }
  return r;
}

ClassReport check_extras(const FiniteAlgebra& a) {
  if (!a.is_pseudo_hoop())
    throw Error("not_a_hoop", "check_extras needs a pseudo-hoop");
  ClassReport r{"extras", true, {}};
  const int n = a.size();
  const auto bot = a.bottom();
  if (!bot) r.add("bounded");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!join_is_one(a, a.to(x, y), a.to(y, x)) ||
          !join_is_one(a, a.lto(x, y), a.lto(y, x)))
        r.add("prelinearity", {x, y});
      for (int z = 0; z < n; ++z)
        if ((a.mul(x, y) == a.mul(x, z) || a.mul(y, x) == a.mul(z, x)) &&
            y != z)
          r.add("cancellative", {x, y, z});
    }
  const bool lattice = check_join_semilattice(a);  // meets exist in any hoop
  const bool pseudo_bl = bot && lattice && r.law_holds("prelinearity");
  if (!pseudo_bl) r.add("pseudo_bl");
  if (!pseudo_bl) {
    r.add("pseudo_mv");
  } else {
    for (int x = 0; x < n; ++x)
      if (a.lto(a.to(x, *bot), *bot) != x || a.to(a.lto(x, *bot), *bot) != x)
        r.add("pseudo_mv", {x});
  }
  return r;
}

MtlFlags check_mtl(const FiniteAlgebra& a) {
  MtlFlags f;
  f.to_mtl = true;
  f.lto_mtl = true;
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!join_is_one(a, a.to(x, y), a.to(y, x))) f.to_mtl = false;
      if (!join_is_one(a, a.lto(x, y), a.lto(y, x))) f.lto_mtl = false;
    }
  f.pseudo_mtl = f.to_mtl && f.lto_mtl;
  return f;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
residuals_from_mul(const Poset& order, const std::vector<int>& mul) {
  const int n = order.size();
  std::vector<int> to(static_cast<std::size_t>(n) * n);
  std::vector<int> lto(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      Mask sol = 0;
      for (int x = 0; x < n; ++x)
        if (order.leq(mul[x * n + y], z)) sol |= bit(x);
      bool found = false;
      for (int m = 0; m < n && !found; ++m)
        if (has_bit(sol, m) && (sol & ~order.dn_mask(m)) == 0) {
          to[y * n + z] = m;
          found = true;
        }
      if (!found) return std::nullopt;
    }
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      Mask sol = 0;
      for (int y = 0; y < n; ++y)
        if (order.leq(mul[x * n + y], z)) sol |= bit(y);
      bool found = false;
      for (int m = 0; m < n && !found; ++m)
        if (has_bit(sol, m) && (sol & ~order.dn_mask(m)) == 0) {
          lto[x * n + z] = m;
          found = true;
        }
      if (!found) return std::nullopt;
    }
  return std::make_pair(std::move(to), std::move(lto));
}

}  // namespace qbforge
