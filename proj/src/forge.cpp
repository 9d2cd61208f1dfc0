#include "qbforge/forge.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <utility>

#include "qbforge/filters.hpp"
#include "qbforge/hoops.hpp"
#include "qbforge/primes.hpp"
#include "qbforge/quantale.hpp"
#include "qbforge/types.hpp"

namespace qbforge {

namespace {

constexpr int kMaxSearchSize = 5;

bool transitive(int n, const std::vector<int>& leq) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[x * n + y]) continue;
      for (int z = 0; z < n; ++z)
        if (leq[y * n + z] && !leq[x * n + z]) return false;
    }
  return true;
}

std::vector<std::string> forge_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

std::vector<int> leq_matrix(const Poset& p) {
  const int n = p.size();
  std::vector<int> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[x * n + y] = p.leq(x, y);
  return leq;
}

// The four arrow laws on raw tables, mirroring check_quantum_b.
bool raw_qb_laws(const Poset& p, const std::vector<int>& to,
                 const std::vector<int>& lto) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!p.leq(to[y * n + z], to[to[x * n + y] * n + to[x * n + z]]))
          return false;
        if (!p.leq(lto[y * n + z], lto[lto[x * n + y] * n + lto[x * n + z]]))
          return false;
        if (p.leq(y, z) && !p.leq(to[x * n + y], to[x * n + z])) return false;
        if (p.leq(x, to[y * n + z]) != p.leq(y, lto[x * n + z])) return false;
      }
  return true;
}

// lto is a function of to: exchange pins down the principal downset of
// every lto cell.  False when some required downset is not principal.
bool derive_lto(const Poset& p, const std::vector<int>& to,
                std::vector<int>& lto) {
  const int n = p.size();
  lto.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      Mask s = 0;
      for (int y = 0; y < n; ++y)
        if (p.leq(x, to[y * n + z])) s |= bit(y);
      if (s == 0) return false;
      int best = -1;
      for (int y = 0; y < n; ++y)
        if (has_bit(s, y) && (best < 0 || p.leq(best, y))) best = y;
      if (best < 0 || p.dn_mask(best) != s) return false;
      lto[x * n + z] = best;
    }
  return true;
}

// Monotonicity of a partially assigned arrow table (-1 = unassigned):
// antitone in the first slot, isotone in the second.
bool arrow_monotone_partial(const Poset& p, const std::vector<int>& to) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = to[x * n + y];
      if (v < 0) continue;
      for (int x2 = 0; x2 < n; ++x2) {
        const int w = to[x2 * n + y];
        if (w < 0) continue;
        if (p.leq(x, x2) && !p.leq(w, v)) return false;
      }
      for (int y2 = 0; y2 < n; ++y2) {
        const int w = to[x * n + y2];
        if (w < 0) continue;
        if (p.leq(y, y2) && !p.leq(v, w)) return false;
      }
    }
  return true;
}

bool mul_monotone_partial(const Poset& p, const std::vector<int>& mul) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = mul[x * n + y];
      if (v < 0) continue;
      for (int x2 = 0; x2 < n; ++x2) {
        const int w = mul[x2 * n + y];
        if (w >= 0 && p.leq(x, x2) && !p.leq(v, w)) return false;
      }
      for (int y2 = 0; y2 < n; ++y2) {
        const int w = mul[x * n + y2];
        if (w >= 0 && p.leq(y, y2) && !p.leq(v, w)) return false;
      }
    }
  return true;
}

bool mul_assoc_partial(int n, const std::vector<int>& mul) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = mul[x * n + y];
      for (int z = 0; z < n; ++z) {
        const int yz = mul[y * n + z];
        if (xy < 0 || yz < 0) continue;
        const int l = mul[xy * n + z], r = mul[x * n + yz];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

using MemberSink = std::function<bool(FiniteAlgebra)>;

struct SearchDriver {
  TargetClass target;
  bool pruned;
  SearchStats* stats;
  const MemberSink& sink;
  int size = 0;
  std::uint64_t index = 0;  // member counter within the current size
  bool stopped = false;

  // Completed raw tables become a member iff the class oracle agrees.
  void leaf(const Poset& p, std::vector<int> to, std::vector<int> lto,
            std::optional<std::vector<int>> mul, std::optional<int> unit) {
    if (stats) ++stats->leaves;
    FiniteAlgebra::Data d;
    d.name = std::string(class_name(target)) + ":" +
             std::to_string(size) + ":" + std::to_string(index);
    d.labels = forge_labels(size);
    d.leq = leq_matrix(p);
    d.to = std::move(to);
    d.lto = std::move(lto);
    d.mul = std::move(mul);
    d.unit = unit;
    FiniteAlgebra a = FiniteAlgebra::create(std::move(d));
    if (!in_class(target, a)) return;
    ++index;
    if (stats) ++stats->members;
    if (!sink(std::move(a))) stopped = true;
  }
};

// Arrow-table search for the product-free class.  The unit row of both
// tables is the unital law itself and is fixed in every mode; pruning
// additionally folds in the forced cells x <= y => u, the value bound
// v != u elsewhere, monotonicity, and the exchange-derived lto.
void arrow_search(SearchDriver& dr, const Poset& p) {
  const int n = p.size();
  const auto top = p.top();
  if (!top) return;  // an integral unit is a greatest element
  const int u = *top;

  std::vector<int> to(n * n, -1), lto(n * n, -1);
  for (int x = 0; x < n; ++x) to[u * n + x] = lto[u * n + x] = x;

  // cell = (table, x, y); table 0 is to, 1 is lto
  std::vector<std::array<int, 3>> cells;
  if (dr.pruned) {
    for (int x = 0; x < n; ++x) {
      if (x == u) continue;
      for (int y = 0; y < n; ++y) {
        if (p.leq(x, y))
          to[x * n + y] = u;
        else
          cells.push_back({0, x, y});
      }
    }
  } else {
    for (int t = 0; t < 2; ++t)
      for (int x = 0; x < n; ++x) {
        if (x == u) continue;
        for (int y = 0; y < n; ++y) cells.push_back({t, x, y});
      }
  }

  const std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (dr.stopped) return;
    if (k == cells.size()) {
      if (dr.pruned) {
        std::vector<int> derived;
        if (!derive_lto(p, to, derived)) return;
        if (!raw_qb_laws(p, to, derived)) return;
        dr.leaf(p, to, derived, std::nullopt, u);
      } else {
        if (!raw_qb_laws(p, to, lto)) return;
        dr.leaf(p, to, lto, std::nullopt, u);
      }
      return;
    }
    const auto [t, x, y] = cells[k];
    std::vector<int>& tab = t == 0 ? to : lto;
    for (int v = 0; v < n; ++v) {
      if (dr.pruned && v == u) continue;
      tab[x * n + y] = v;
      if (!dr.pruned || arrow_monotone_partial(p, tab)) rec(k + 1);
      if (dr.stopped) break;
    }
    tab[x * n + y] = -1;
  };
  rec(0);
}

// Product-table search for the residuated classes.  Residuals are
// recovered from the finished table; their existence is part of the
// class, not a pruning shortcut.
void mul_search(SearchDriver& dr, const Poset& p) {
  const int n = p.size();
  const bool integral = dr.target != TargetClass::two_sided_residuated_vee;
  const auto top = p.top();
  if (integral && !top) return;
  if (dr.pruned && (dr.target == TargetClass::integral_residuated_vee ||
                    dr.target == TargetClass::two_sided_residuated_vee)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!p.join(x, y)) return;  // no tables can restore missing joins
  }

  std::vector<int> mul(n * n, -1);
  std::vector<std::pair<int, int>> cells;
  std::optional<int> unit;
  if (integral) {
    unit = *top;
    for (int x = 0; x < n; ++x) mul[*top * n + x] = mul[x * n + *top] = x;
    for (int x = 0; x < n; ++x) {
      if (x == *top) continue;
      for (int y = 0; y < n; ++y)
        if (y != *top) cells.push_back({x, y});
    }
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) cells.push_back({x, y});
  }

  const auto leaf = [&] {
    if (!mul_assoc_partial(n, mul) || !mul_monotone_partial(p, mul)) return;
    if (!integral) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int v = mul[x * n + y];
          if (!p.leq(v, x) || !p.leq(v, y)) return;
        }
    }
    auto res = residuals_from_mul(p, mul);
    if (!res) return;
    dr.leaf(p, std::move(res->first), std::move(res->second), mul, unit);
  };

  const std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (dr.stopped) return;
    if (k == cells.size()) {
      leaf();
      return;
    }
    const auto [x, y] = cells[k];
    const Mask domain = dr.pruned ? (p.dn_mask(x) & p.dn_mask(y))
                                  : (bit(n) - 1);
    for (int v = 0; v < n; ++v) {
      if (!has_bit(domain, v)) continue;
      mul[x * n + y] = v;
      if (!dr.pruned ||
          (mul_monotone_partial(p, mul) && mul_assoc_partial(n, mul)))
        rec(k + 1);
      if (dr.stopped) break;
    }
    mul[x * n + y] = -1;
  };
  rec(0);
}

std::string serialize_key(int n, const Poset& p, const FiniteAlgebra& a,
                          const std::vector<int>& perm) {
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::string out;
  out.push_back(char(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(char(p.leq(perm[i], perm[j])));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(char(inv[a.to(perm[i], perm[j])]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(char(inv[a.lto(perm[i], perm[j])]));
  out.push_back(char(a.has_mul() ? 1 : 0));
  if (a.has_mul())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out.push_back(char(inv[a.mul(perm[i], perm[j])]));
  const auto u = a.unit();
  out.push_back(char(u ? inv[*u] + 1 : 0));
  return out;
}

}  // namespace

const char* class_name(TargetClass t) {
  switch (t) {
    case TargetClass::integral_qb: return "integral_qb";
    case TargetClass::integral_residuated: return "integral_residuated";
    case TargetClass::integral_residuated_vee:
      return "integral_residuated_vee";
    case TargetClass::pseudo_hoop: return "pseudo_hoop";
    case TargetClass::two_sided_residuated_vee:
      return "two_sided_residuated_vee";
  }
  return "?";
}

TargetClass class_by_name(const std::string& name) {
  for (TargetClass t :
       {TargetClass::integral_qb, TargetClass::integral_residuated,
        TargetClass::integral_residuated_vee, TargetClass::pseudo_hoop,
        TargetClass::two_sided_residuated_vee})
    if (name == class_name(t)) return t;
  throw Error("unknown_class", name);
}

bool in_class(TargetClass t, const FiniteAlgebra& a) {
  const bool res = a.has_mul() && a.is_quantum_b() && a.is_residuated();
  switch (t) {
    case TargetClass::integral_qb:
      return a.is_quantum_b() && a.unit().has_value() && check_integral(a);
    case TargetClass::integral_residuated:
      return res && a.unit().has_value() && check_integral(a);
    case TargetClass::integral_residuated_vee:
      return res && a.unit().has_value() && check_integral(a) &&
             check_join_semilattice(a);
    case TargetClass::pseudo_hoop:
      return res && check_integral(a) && a.is_pseudo_hoop();
    case TargetClass::two_sided_residuated_vee:
      return res && check_two_sided(a) && check_join_semilattice(a);
  }
  return false;
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > kMaxSearchSize)
    throw Error("cap_exceeded", "poset enumeration is dimensioned for 1.." +
                                    std::to_string(kMaxSearchSize) +
                                    " elements");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  std::vector<Poset> out;
  std::vector<int> state(pairs.size(), 0);  // 0 apart, 1 i<j, 2 j<i
  for (;;) {
    std::vector<int> leq(n * n, 0);
    for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) leq[pairs[k].first * n + pairs[k].second] = 1;
      if (state[k] == 2) leq[pairs[k].second * n + pairs[k].first] = 1;
    }
    if (transitive(n, leq)) out.push_back(Poset::validate(n, leq));

    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  return out;
}

std::vector<Poset> enumerate_posets_upto_iso(int n) {
  std::vector<Poset> out;
  std::set<std::string> seen;
  for (const Poset& p : enumerate_posets(n))
    if (seen.insert(canonical_key(p)).second) out.push_back(p);
  return out;
}

std::string canonical_key(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur;
    cur.push_back(char(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur.push_back(char(p.leq(perm[i], perm[j])));
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string canonical_key(const FiniteAlgebra& a) {
  const int n = a.size();
  if (n > 8) throw Error("cap_exceeded", "canonical keys stop at 8 elements");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur = serialize_key(n, a.order(), a, perm);
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void for_each_member(const SearchSpec& spec,
                     const std::function<bool(const FiniteAlgebra&)>& fn,
                     SearchStats* stats) {
  if (spec.max_size < 1 || spec.max_size > kMaxSearchSize)
    throw Error("cap_exceeded", "full table search is dimensioned for 1.." +
                                    std::to_string(kMaxSearchSize) +
                                    " elements");
  MemberSink sink = [&](FiniteAlgebra a) { return fn(a); };
  SearchDriver dr{spec.target, spec.pruned, stats, sink};
  for (int n = 1; n <= spec.max_size && !dr.stopped; ++n) {
    dr.size = n;
    dr.index = 0;
    for (const Poset& p : enumerate_posets(n)) {
      if (stats) ++stats->posets;
      if (spec.target == TargetClass::integral_qb)
        arrow_search(dr, p);
      else
        mul_search(dr, p);
      if (dr.stopped) break;
    }
  }
}

std::vector<FiniteAlgebra> enumerate_algebras(const SearchSpec& spec,
                                              SearchStats* stats) {
  std::vector<FiniteAlgebra> out;
  std::set<std::string> seen;
  for_each_member(
      spec,
      [&](const FiniteAlgebra& a) {
        if (spec.dedup && !seen.insert(canonical_key(a)).second) return true;
        out.push_back(a);
        if (stats) ++stats->emitted;
        return out.size() < spec.limit;
      },
      stats);
  return out;
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {
      "true",
      "false",
      "noncommutative",
      "to-ne-lto",
      "pseudo-mtl",
      "not-pseudo-mtl",
      "pf-ne-pfvee",
      "pfto-ne-pfvee",
      "pflto-ne-pfvee",
      "violates-coprime-laws",
      "no-bottom",
      "balanced-not-supercompact",
  };
  return names;
}

namespace {

bool mtl_ready(const FiniteAlgebra& a) {
  return a.has_mul() && a.is_residuated() && a.unit().has_value() &&
         check_integral(a) && check_join_semilattice(a);
}

// vee-primeness against one of the arrow flags, over every filter
bool prime_class_gap(const FiniteAlgebra& a, int which) {
  if (!mtl_ready(a)) return false;
  for (const PrimeClassification& c : classify_all(a)) {
    const bool arrow = which == 0   ? c.prime
                       : which == 1 ? c.to_prime
                                    : c.lto_prime;
    if (arrow != c.vee_prime) return true;
  }
  return false;
}

}  // namespace

Predicate predicate_by_name(const std::string& name) {
  if (name == "true") return [](const FiniteAlgebra&) { return true; };
  if (name == "false") return [](const FiniteAlgebra&) { return false; };
  if (name == "noncommutative")
    return [](const FiniteAlgebra& a) {
      if (!a.has_mul()) return false;
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          if (a.mul(x, y) != a.mul(y, x)) return true;
      return false;
    };
  if (name == "to-ne-lto")
    return [](const FiniteAlgebra& a) {
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          if (a.to(x, y) != a.lto(x, y)) return true;
      return false;
    };
  if (name == "pseudo-mtl")
    return [](const FiniteAlgebra& a) {
      return mtl_ready(a) && check_mtl(a).pseudo_mtl;
    };
  if (name == "not-pseudo-mtl")
    return [](const FiniteAlgebra& a) {
      return mtl_ready(a) && !check_mtl(a).pseudo_mtl;
    };
  if (name == "pf-ne-pfvee")
    return [](const FiniteAlgebra& a) { return prime_class_gap(a, 0); };
  if (name == "pfto-ne-pfvee")
    return [](const FiniteAlgebra& a) { return prime_class_gap(a, 1); };
  if (name == "pflto-ne-pfvee")
    return [](const FiniteAlgebra& a) { return prime_class_gap(a, 2); };
  if (name == "violates-coprime-laws")
    return [](const FiniteAlgebra& a) {
      return a.has_mul() && a.is_pseudo_hoop() && !coprime_laws(a).holds;
    };
  if (name == "no-bottom")
    return [](const FiniteAlgebra& a) {
      return !a.order().bottom().has_value();
    };
  if (name == "balanced-not-supercompact")
    return [](const FiniteAlgebra& a) {
      for (UpperSet c : enumerate_upper_sets(a))
        if (!c.empty() && is_balanced(a, c) && !is_supercompact(a, c))
          return true;
      return false;
    };
  throw Error("unknown_predicate", name);
}

SearchOutcome find_counterexamples(const SearchSpec& spec) {
  const Predicate pred = predicate_by_name(spec.predicate);
  SearchOutcome out;
  std::set<std::string> seen;
  for_each_member(
      spec,
      [&](const FiniteAlgebra& a) {
        if (spec.dedup && !seen.insert(canonical_key(a)).second) return true;
        if (!pred(a)) return true;
        out.witnesses.push_back(a);
        ++out.stats.emitted;
        return out.witnesses.size() < spec.limit;
      },
      &out.stats);
  return out;
}

}  // namespace qbforge
