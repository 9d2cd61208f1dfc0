#include "qbforge/quantale.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace qbforge {

namespace {

Mask full_mask(int n) { return (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1; }

bool is_upper_mask(const FiniteAlgebra& a, Mask s) {
  return a.order().is_upper(s);
}

UpperSet product_form_umul(const FiniteAlgebra& a, UpperSet x, UpperSet y) {
  const int n = a.size();
  Mask out = 0;
  for (int e = 0; e < n; ++e) {
    if (!x.contains(e)) continue;
    for (int f = 0; f < n; ++f) {
      if (!y.contains(f)) continue;
      out |= a.order().up_mask(a.mul(e, f));
    }
  }
  return UpperSet{out};
}

}  // namespace

UpperSet upper_closure(const FiniteAlgebra& a, Mask s) {
  Mask out = 0;
  for (int x = 0; x < a.size(); ++x)
    if (has_bit(s, x)) out |= a.order().up_mask(x);
  return UpperSet{out};
}

UpperSet up(const FiniteAlgebra& a, int x) {
  return UpperSet{a.order().up_mask(x)};
}

UpperSet full_set(const FiniteAlgebra& a) {
  return UpperSet{full_mask(a.size())};
}

UpperSet umul(const FiniteAlgebra& a, UpperSet x, UpperSet y) {
  const int n = a.size();
  Mask out = 0;
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (y.contains(f) && x.contains(a.to(f, e))) {
        out |= bit(e);
        break;
      }
    }
  }
  UpperSet result{out};
  if (a.has_mul() && a.is_residuated() && is_upper_mask(a, x.bits) &&
      is_upper_mask(a, y.bits)) {
    UpperSet alt = product_form_umul(a, x, y);
    if (!(alt == result))
      throw Error("oracle_mismatch",
                  "quantale product disagrees with the product formula on " +
                      a.name());
  }
  return result;
}

UpperSet ures_l(const FiniteAlgebra& a, UpperSet x, UpperSet z) {
  const int n = a.size();
  Mask out = 0;
  for (int y = 0; y < n; ++y) {
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      if (!x.contains(e)) continue;
      for (int f = 0; f < n; ++f) {
        if (a.leq(y, a.lto(e, f)) && !z.contains(f)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out |= bit(y);
  }
  return UpperSet{out};
}

UpperSet ures_r(const FiniteAlgebra& a, UpperSet y, UpperSet z) {
  const int n = a.size();
  Mask out = 0;
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      if (!y.contains(e)) continue;
      for (int f = 0; f < n; ++f) {
        if (a.leq(x, a.to(e, f)) && !z.contains(f)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out |= bit(x);
  }
  return UpperSet{out};
}

UpperSet inv_res(const FiniteAlgebra& a, UpperSet lhs, UpperSet rhs,
                 InvResSide side) {
  const int n = a.size();
  Mask acc = full_mask(n);
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (!is_upper_mask(a, s)) continue;
    UpperSet cand{s};
    UpperSet prod = (side == InvResSide::left) ? umul(a, cand, lhs)
                                               : umul(a, lhs, cand);
    if (rhs.subset_of(prod)) acc &= s;
    if (s == full_mask(n)) break;  // Mask overflow guard at n = 32
  }
  return UpperSet{acc};
}

std::size_t count_upper_sets(const FiniteAlgebra& a) {
  const Mask top = full_mask(a.size());
  std::size_t count = 0;
  for (Mask s = 0;; ++s) {
    if (is_upper_mask(a, s)) ++count;
    if (s == top) break;
  }
  return count;
}

std::vector<UpperSet> enumerate_upper_sets(const FiniteAlgebra& a,
                                           std::size_t cap) {
  std::size_t total = count_upper_sets(a);
  if (total > cap)
    throw Error("cap_exceeded",
                "upper set lattice of " + a.name() + " has " +
                    std::to_string(total) + " members, cap is " +
                    std::to_string(cap));
  std::vector<UpperSet> out;
  out.reserve(total);
  const Mask top = full_mask(a.size());
  for (Mask s = 0;; ++s) {
    if (is_upper_mask(a, s)) out.push_back(UpperSet{s});
    if (s == top) break;
  }
  std::sort(out.begin(), out.end(), UpperSetLess{});
  return out;
}

UEnv build_uenv(const FiniteAlgebra& a, std::size_t cap) {
  UEnv env;
  env.sets = enumerate_upper_sets(a, cap);
  env.index_of.assign(std::size_t{1} << a.size(), -1);
  for (std::size_t i = 0; i < env.sets.size(); ++i)
    env.index_of[env.sets[i].bits] = static_cast<int>(i);
  return env;
}

namespace {

void check_triple(const FiniteAlgebra& a, ClassReport& report, UpperSet x,
                  UpperSet y, UpperSet z) {
  UpperSet xy = umul(a, x, y);
  UpperSet yz = umul(a, y, z);
  if (!(umul(a, xy, z) == umul(a, x, yz)))
    report.add("umul_assoc", {}, {x, y, z});

  if (!(umul(a, x | y, z) == (umul(a, x, z) | umul(a, y, z))))
    report.add("umul_union_left", {}, {x, y, z});
  if (!(umul(a, z, x | y) == (umul(a, z, x) | umul(a, z, y))))
    report.add("umul_union_right", {}, {x, y, z});

  // a ~> (b -> c) = b -> (a ~> c)
  if (!(ures_l(a, x, ures_r(a, y, z)) == ures_r(a, y, ures_l(a, x, z))))
    report.add("res_swap", {}, {x, y, z});
  // (ab) -> c = a -> (b -> c)
  if (!(ures_r(a, xy, z) == ures_r(a, x, ures_r(a, y, z))))
    report.add("res_to_curry", {}, {x, y, z});
  // (ab) ~> c = b ~> (a ~> c)
  if (!(ures_l(a, xy, z) == ures_l(a, y, ures_l(a, x, z))))
    report.add("res_lto_curry", {}, {x, y, z});
  // (x v y) -> z = (x -> z) ^ (y -> z), join = union, meet = intersection
  if (!(ures_r(a, x | y, z) == (ures_r(a, x, z) & ures_r(a, y, z))))
    report.add("res_to_meet", {}, {x, y, z});
  if (!(ures_l(a, x | y, z) == (ures_l(a, x, z) & ures_l(a, y, z))))
    report.add("res_lto_meet", {}, {x, y, z});

  bool prod_below = xy.subset_of(z);
  bool right_adj = x.subset_of(ures_r(a, y, z));
  bool left_adj = y.subset_of(ures_l(a, x, z));
  if (prod_below != right_adj || prod_below != left_adj)
    report.add("adjunction", {}, {x, y, z});
}

}  // namespace

ClassReport check_quantale_laws(const FiniteAlgebra& a, std::size_t cap,
                                std::uint64_t seed) {
  ClassReport report;
  report.class_name = "quantale";

  UpperSet empty{0};
  UpperSet whole = full_set(a);
  if (!(umul(a, empty, whole) == empty) || !(umul(a, whole, empty) == empty))
    report.add("umul_empty", {}, {whole});
  // the empty join resolves the nullary instance of the meet laws
  if (!(ures_r(a, empty, UpperSet{0}) == whole) ||
      !(ures_l(a, empty, UpperSet{0}) == whole))
    report.add("res_to_meet", {}, {empty});

  std::optional<int> unit;
  if (a.unit() && check_integral(a)) unit = a.unit();

  std::size_t total = count_upper_sets(a);
  if (total <= cap) {
    std::vector<UpperSet> sets = enumerate_upper_sets(a, cap);
    for (UpperSet x : sets) {
      if (unit) {
        UpperSet one = up(a, *unit);
        if (!(umul(a, one, x) == x) || !(umul(a, x, one) == x))
          report.add("unit_upper", {*unit}, {x});
      }
      for (UpperSet y : sets)
        for (UpperSet z : sets) check_triple(a, report, x, y, z);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Mask> pick(0, full_mask(a.size()));
    auto random_upper = [&] { return upper_closure(a, pick(rng)); };
    constexpr int kRandomTriples = 2000;
    for (int i = 0; i < kRandomTriples; ++i) {
      UpperSet x = random_upper();
      if (unit) {
        UpperSet one = up(a, *unit);
        if (!(umul(a, one, x) == x) || !(umul(a, x, one) == x))
          report.add("unit_upper", {*unit}, {x});
      }
      check_triple(a, report, x, random_upper(), random_upper());
    }
  }
  return report;
}

bool is_supercompact(const FiniteAlgebra& a, UpperSet c, std::size_t cap) {
  if (c.empty()) return false;
  std::vector<UpperSet> sets = enumerate_upper_sets(a, cap);
  for (UpperSet x : sets)
    for (UpperSet y : sets) {
      if (c.subset_of(x | y) && !c.subset_of(x) && !c.subset_of(y))
        return false;
    }
  return true;
}

bool is_balanced(const FiniteAlgebra& a, UpperSet c, std::size_t cap) {
  if (c.empty()) return false;
  UpperSet whole = full_set(a);
  if (!(umul(a, c, whole) == whole) || !(umul(a, whole, c) == whole))
    return false;
  std::vector<UpperSet> sets = enumerate_upper_sets(a, cap);
  for (UpperSet x : sets)
    for (UpperSet y : sets) {
      UpperSet m = x & y;
      if (!(umul(a, c, m) == (umul(a, c, x) & umul(a, c, y)))) return false;
      if (!(umul(a, m, c) == (umul(a, x, c) & umul(a, y, c)))) return false;
    }
  return true;
}

ClassReport check_conucleus(const FiniteAlgebra& a, const UEnv& env,
                            const std::function<UpperSet(UpperSet)>& g) {
  ClassReport report;
  report.class_name = "conucleus";
  for (UpperSet x : env.sets) {
    UpperSet gx = g(x);
    if (!gx.subset_of(x)) report.add("deflationary", {}, {x});
    if (!(g(gx) == gx)) report.add("idempotent", {}, {x});
    for (UpperSet y : env.sets) {
      if (x.subset_of(y) && !gx.subset_of(g(y)))
        report.add("monotone", {}, {x, y});
      if (!umul(a, gx, g(y)).subset_of(g(umul(a, x, y))))
        report.add("mul_law", {}, {x, y});
    }
  }

  std::vector<UpperSet> fixed = fixed_points(env, g);
  auto is_fixed = [&](UpperSet s) {
    return std::find(fixed.begin(), fixed.end(), s) != fixed.end();
  };
  for (UpperSet x : fixed)
    for (UpperSet y : fixed) {
      if (!is_fixed(x | y)) report.add("fixed_union_closed", {}, {x, y});
      if (!is_fixed(umul(a, x, y))) report.add("fixed_mul_closed", {}, {x, y});
    }
  if (!is_fixed(UpperSet{0})) report.add("fixed_union_closed", {}, {});
  return report;
}

std::vector<UpperSet> fixed_points(const UEnv& env,
                                   const std::function<UpperSet(UpperSet)>& g) {
  std::vector<UpperSet> out;
  for (UpperSet x : env.sets)
    if (g(x) == x) out.push_back(x);
  return out;
}

}  // namespace qbforge
