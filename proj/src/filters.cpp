#include "qbforge/filters.hpp"

#include <algorithm>
#include <string>

namespace qbforge {

bool FilterLattice::contains(UpperSet s) const {
  return std::any_of(filters.begin(), filters.end(),
                     [&](const Filter& f) { return f.set == s; });
}

bool is_filter(const FiniteAlgebra& a, UpperSet x) {
  if (x.empty() || !a.order().is_upper(x.bits)) return false;
  bool by_product = umul(a, x, x).subset_of(x);
  bool by_rule = true;
  for (int y = 0; y < a.size() && by_rule; ++y)
    for (int z = 0; z < a.size(); ++z)
      if (x.contains(y) && x.contains(a.to(y, z)) && !x.contains(z)) {
        by_rule = false;
        break;
      }
  if (by_product != by_rule)
    throw Error("oracle_mismatch",
                "the two filter characterizations disagree on " + a.name());
  return by_rule;
}

namespace {

// close under the arrow rule and upward, the route that needs no
// multiplication
Mask rule_closure(const FiniteAlgebra& a, Mask seed) {
  Mask cur = upper_closure(a, seed).bits;
  for (bool grew = true; grew;) {
    grew = false;
    for (int y = 0; y < a.size(); ++y) {
      if (!has_bit(cur, y)) continue;
      for (int z = 0; z < a.size(); ++z)
        if (!has_bit(cur, z) && has_bit(cur, a.to(y, z))) {
          cur |= a.order().up_mask(z);
          grew = true;
        }
    }
  }
  return cur;
}

Mask product_closure(const FiniteAlgebra& a, Mask seed) {
  Mask prods = seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < a.size(); ++x) {
      if (!has_bit(prods, x)) continue;
      for (int y = 0; y < a.size(); ++y) {
        int p = has_bit(prods, y) ? a.mul(x, y) : -1;
        if (p >= 0 && !has_bit(prods, p)) {
          prods |= bit(p);
          grew = true;
        }
      }
    }
  }
  return upper_closure(a, prods).bits;
}

}  // namespace

Filter generated_filter(const FiniteAlgebra& a, Mask seed) {
  if (seed == 0)
    throw Error("precondition", "generated_filter needs a non-empty seed");
  Mask cur = rule_closure(a, seed);
  if (a.has_mul() && a.is_residuated() && product_closure(a, seed) != cur)
    throw Error("oracle_mismatch",
                "rule closure and product closure disagree on " + a.name());
  return Filter{UpperSet{cur}};
}

Filter extend_filter(const FiniteAlgebra& a, const Filter& f, int e) {
  if (!a.is_residuated() || !check_two_sided(a))
    throw Error("precondition",
                "extend_filter needs a two-sided residuated algebra");
  if (f.set.contains(e))
    throw Error("precondition", "element is already in the filter");

  Filter out = generated_filter(a, f.set.bits | bit(e));

  // alternating words x1*e*x2*...*e*xn, left to right
  Mask words = f.set.bits;
  for (bool grew = true; grew;) {
    grew = false;
    for (int w = 0; w < a.size(); ++w) {
      if (!has_bit(words, w)) continue;
      int we = a.mul(w, e);
      for (int x = 0; x < a.size(); ++x) {
        if (!f.set.contains(x)) continue;
        int next = a.mul(we, x);
        if (!has_bit(words, next)) {
          words |= bit(next);
          grew = true;
        }
      }
    }
  }
  if (upper_closure(a, words).bits != out.set.bits)
    throw Error("oracle_mismatch",
                "alternating word closure disagrees on " + a.name());
  return out;
}

FilterLattice all_filters(const FiniteAlgebra& a) {
  FilterLattice out;
  for (UpperSet s : enumerate_upper_sets(a, std::size_t{1} << a.size()))
    if (is_filter(a, s)) out.filters.push_back(Filter{s});
  for (const Filter& f : out.filters)
    for (const Filter& g : out.filters) {
      UpperSet m = f.set & g.set;
      if (!m.empty() && !is_filter(a, m))
        throw Error("theorem_violation",
                    "filter intersection failed to be a filter on " +
                        a.name());
    }
  return out;
}

ClassReport mu_law_suite(const FiniteAlgebra& a, std::size_t cap) {
  return mu_law_suite_with(
      a, cap, [](UpperSet f, UpperSet x) { return f & x; });
}

ClassReport mu_law_suite_with(const FiniteAlgebra& a, std::size_t cap,
                              const MuFn& mu_fn) {
  if (!a.is_quantum_b() || !check_integral(a))
    throw Error("precondition", "the restriction suite needs an integral "
                                "quantum B-algebra");
  const int one = a.order().top().value();
  UEnv env = build_uenv(a, cap);
  ClassReport report;
  report.class_name = "mu_suite";

  for (const Filter& f : all_filters(a).filters) {
    UpperSet fs = f.set;

    auto g = [&](UpperSet x) { return mu_fn(fs, x); };
    ClassReport conucleus = check_conucleus(a, env, g);
    bool fixed_ok = true;
    std::vector<UpperSet> fixed = fixed_points(env, g);
    for (UpperSet x : env.sets) {
      bool inside = x.subset_of(fs);
      bool is_fixed = std::find(fixed.begin(), fixed.end(), x) != fixed.end();
      if (inside != is_fixed) fixed_ok = false;
    }
    if (!conucleus.holds || !fixed_ok) report.add("L2", {}, {fs});

    for (UpperSet x : env.sets) {
      UpperSet mfx = mu_fn(fs, x);

      for (UpperSet y : env.sets)
        if (!umul(a, mfx, mu_fn(fs, y)).subset_of(mu_fn(fs, umul(a, x, y))))
          report.add("L1", {}, {fs, x, y});

      if (!(mfx == mu_fn(umul(a, mfx, mfx), x))) report.add("P1", {}, {fs, x});

      UpperSet w = ures_l(a, mfx, ures_r(a, mfx, x));
      if (w.contains(one) &&
          !(umul(a, umul(a, mfx, mu_fn(fs, w)), mfx) == mfx))
        report.add("P2", {}, {fs, x});
      if (is_filter(a, mfx) != (mfx.contains(one) && w.contains(one)))
        report.add("P3", {}, {fs, x});

      if (!x.contains(one)) continue;
      UpperSet yr = ures_r(a, mfx, x);
      UpperSet zr = ures_l(a, mfx, x);
      UpperSet my = mu_fn(fs, yr);
      UpperSet mz = mu_fn(fs, zr);

      if (!(umul(a, mfx, mz) == mfx) || !(umul(a, my, mfx) == mfx))
        report.add("C1", {}, {fs, x});
      if (!(ures_r(a, my, yr) == yr)) report.add("C2", {}, {fs, x});
      if (!(ures_l(a, mz, zr) == zr)) report.add("C3", {}, {fs, x});
      if (!(umul(a, yr, my) == yr)) report.add("C4", {}, {fs, x});
      if (!(umul(a, mz, zr) == zr)) report.add("C5", {}, {fs, x});
      if (!(my == umul(a, my, my)) ||
          (my.contains(one) && !is_filter(a, my)))
        report.add("C6", {}, {fs, x});
      if (!(mz == umul(a, mz, mz)) ||
          (mz.contains(one) && !is_filter(a, mz)))
        report.add("C7", {}, {fs, x});
    }
  }
  return report;
}

}  // namespace qbforge
