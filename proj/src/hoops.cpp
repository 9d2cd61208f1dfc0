#include "qbforge/hoops.hpp"

#include <algorithm>
#include <string>

#include "qbforge/quantale.hpp"

namespace qbforge {

namespace {

Mask lifted(const FiniteAlgebra& a, Mask x, Mask y, int (*op)(const FiniteAlgebra&, int, int)) {
  Mask out = 0;
  for (int e = 0; e < a.size(); ++e)
    for (int f = 0; f < a.size(); ++f)
      if (has_bit(x, e) && has_bit(y, f)) out |= bit(op(a, e, f));
  return out;
}

void require_hoop(const FiniteAlgebra& a) {
  if (!a.is_pseudo_hoop())
    throw Error("not_a_hoop", a.name() + " is not a pseudo-hoop");
}

Mask polar_mask(const FiniteAlgebra& a, Mask m) {
  Mask out = 0;
  for (int x = 0; x < a.size(); ++x) {
    bool all = true;
    for (int y = 0; y < a.size() && all; ++y)
      if (has_bit(m, y)) all = join_is_one(a, x, y);
    if (all) out |= bit(x);
  }
  return out;
}

}  // namespace

Mask lifted_mul(const FiniteAlgebra& a, Mask x, Mask y) {
  return lifted(a, x, y,
                [](const FiniteAlgebra& b, int e, int f) { return b.mul(e, f); });
}

Mask lifted_to(const FiniteAlgebra& a, Mask x, Mask y) {
  return lifted(a, x, y,
                [](const FiniteAlgebra& b, int e, int f) { return b.to(e, f); });
}

Mask lifted_lto(const FiniteAlgebra& a, Mask x, Mask y) {
  return lifted(a, x, y,
                [](const FiniteAlgebra& b, int e, int f) { return b.lto(e, f); });
}

Polar polar(const FiniteAlgebra& a, Mask m) {
  require_hoop(a);
  Mask p = polar_mask(a, m);
  Mask pp = polar_mask(a, p);
  if (!is_filter(a, UpperSet{p}) || (m & ~pp) != 0 ||
      polar_mask(a, pp) != p)
    throw Error("theorem_violation",
                "polar closure identities failed on " + a.name());
  return Polar{m, Filter{UpperSet{p}}};
}

ClassReport polar_laws(const FiniteAlgebra& a) {
  require_hoop(a);
  ClassReport report;
  report.class_name = "polar";
  const Mask full = (Mask{1} << a.size()) - 1;
  for (Mask m = 0;; ++m) {
    Mask p = polar_mask(a, m);
    if (!is_filter(a, UpperSet{p})) report.add("polar_filter", {}, {UpperSet{m}});
    Mask pp = polar_mask(a, p);
    if ((m & ~pp) != 0) report.add("double_contains", {}, {UpperSet{m}});
    if (polar_mask(a, pp) != p) report.add("triple_collapse", {}, {UpperSet{m}});
    for (Mask n = m;; ++n) {
      // m subset of n must shrink the polar
      if ((m & ~n) == 0 && (polar_mask(a, n) & ~p) != 0)
        report.add("antitone", {}, {UpperSet{m}, UpperSet{n}});
      if (n == full) break;
    }
    if (m == full) break;
  }
  return report;
}

ClassReport coprime_laws(const FiniteAlgebra& a) {
  require_hoop(a);
  ClassReport report;
  report.class_name = "coprime";
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (!join_is_one(a, x, y)) continue;
      int m = meet(a, x, y);
      if (a.mul(x, y) != m || a.mul(y, x) != m)
        report.add("coprime_mul", {x, y});
      if (a.to(x, y) != y || a.lto(x, y) != y || a.to(y, x) != x ||
          a.lto(y, x) != x)
        report.add("coprime_arrow", {x, y});
    }
  return report;
}

PairEmbedding polar_embedding(const FiniteAlgebra& a, Mask m) {
  PairEmbedding e;
  e.left = polar(a, m);
  e.right = polar(a, e.left.polar_set.set.bits);
  e.report.class_name = "polar_embedding";

  Mask left = e.left.polar_set.set.bits;
  Mask right = e.right.polar_set.set.bits;
  e.image = 0;
  for (int x = 0; x < a.size(); ++x) {
    if (!has_bit(left, x)) continue;
    for (int y = 0; y < a.size(); ++y) {
      if (!has_bit(right, y)) continue;
      e.domain.emplace_back(x, y);
      e.value.push_back(meet(a, x, y));
      e.image |= bit(e.value.back());
    }
  }

  for (std::size_t i = 0; i < e.domain.size(); ++i)
    for (std::size_t j = i + 1; j < e.domain.size(); ++j)
      if (e.value[i] == e.value[j])
        e.report.add("injective",
                     {e.domain[i].first, e.domain[i].second,
                      e.domain[j].first, e.domain[j].second});

  for (auto [x1, y1] : e.domain)
    for (auto [x2, y2] : e.domain) {
      if (!has_bit(left, a.mul(x1, x2)) || !has_bit(left, a.to(x1, x2)) ||
          !has_bit(left, a.lto(x1, x2)) || !has_bit(right, a.mul(y1, y2)) ||
          !has_bit(right, a.to(y1, y2)) || !has_bit(right, a.lto(y1, y2)))
        e.report.add("component_closed", {x1, y1, x2, y2});
      int fx = meet(a, x1, y1);
      int fy = meet(a, x2, y2);
      if (a.mul(fx, fy) != meet(a, a.mul(x1, x2), a.mul(y1, y2)))
        e.report.add("hom_mul", {x1, y1, x2, y2});
      if (a.to(fx, fy) != meet(a, a.to(x1, x2), a.to(y1, y2)))
        e.report.add("hom_to", {x1, y1, x2, y2});
      if (a.lto(fx, fy) != meet(a, a.lto(x1, x2), a.lto(y1, y2)))
        e.report.add("hom_lto", {x1, y1, x2, y2});
    }

  if (e.image != lifted_mul(a, left, right))
    e.report.add("image_matches_product", {});
  return e;
}

NuResult nu(const FiniteAlgebra& a, const Filter& f, Mask x) {
  Mask direct = 0;
  for (int b = 0; b < a.size(); ++b) {
    if (!f.set.contains(b)) continue;
    bool bound = true;
    for (int e = 0; e < a.size() && bound; ++e)
      if (has_bit(x, e)) bound = a.leq(e, b);
    if (bound) direct |= bit(b);
  }

  Mask ub = (Mask{1} << a.size()) - 1;
  for (int e = 0; e < a.size(); ++e)
    if (has_bit(x, e)) ub &= a.order().up_mask(e);
  if (mu(f, UpperSet{ub}).bits != direct)
    throw Error("oracle_mismatch",
                "bound-set routes disagree on " + a.name());

  return NuResult{UpperSet{direct}, a.order().least_of(direct)};
}

ClassReport nu_filter_theorem(const FiniteAlgebra& a, const Filter& f,
                              Mask x) {
  require_hoop(a);
  ClassReport report;
  report.class_name = "nu_filter";

  Mask bounds = nu(a, f, x).bounds.bits;
  Mask to_img = lifted_to(a, bounds, x);
  Mask lto_img = lifted_lto(a, bounds, x);
  Mask to_bounds = nu(a, f, to_img).bounds.bits;
  Mask lto_bounds = nu(a, f, lto_img).bounds.bits;

  if (!is_filter(a, UpperSet{to_bounds})) report.add("to_filter");
  if (!is_filter(a, UpperSet{lto_bounds})) report.add("lto_filter");
  if (lifted_mul(a, to_bounds, bounds) != bounds) report.add("to_absorption");
  if (lifted_mul(a, bounds, lto_bounds) != bounds)
    report.add("lto_absorption");

  if (popcount(x) == 1) {
    int e = std::countr_zero(x);
    std::optional<int> hat = nu(a, f, x).least;
    if (hat) {
      // the least bound of the single arrow is also the least element
      // of the whole bound-set filter
      std::optional<int> hat_to = nu(a, f, bit(a.to(*hat, e))).least;
      std::optional<int> hat_lto = nu(a, f, bit(a.lto(*hat, e))).least;
      if (!hat_to || a.mul(*hat_to, *hat_to) != *hat_to ||
          a.order().least_of(to_bounds) != hat_to)
        report.add("nuhat_to", {e});
      if (!hat_lto || a.mul(*hat_lto, *hat_lto) != *hat_lto ||
          a.order().least_of(lto_bounds) != hat_lto)
        report.add("nuhat_lto", {e});
    }
  }
  return report;
}

bool is_normal_filter(const FiniteAlgebra& a, const Filter& f) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f.set.contains(a.to(x, y)) != f.set.contains(a.lto(x, y)))
        return false;
  return true;
}

ClassReport least_element_normal(const FiniteAlgebra& a) {
  require_hoop(a);
  ClassReport report;
  report.class_name = "least_element_normal";
  for (const Filter& f : all_filters(a).filters) {
    std::optional<int> least = a.order().least_of(f.set.bits);
    if (!least) {
      report.add("least_exists", {}, {f.set});
      continue;
    }
    if (a.mul(*least, *least) != *least)
      report.add("least_idempotent", {*least}, {f.set});
    for (int x = 0; x < a.size(); ++x)
      if (a.mul(*least, x) != a.mul(x, *least))
        report.add("least_central", {*least, x}, {f.set});
    if (!is_normal_filter(a, f)) report.add("least_normal", {}, {f.set});
  }
  return report;
}

std::optional<SubdirectWitness> subdirect_witness(const FiniteAlgebra& a,
                                                  Mask m) {
  require_hoop(a);
  PairEmbedding emb = polar_embedding(a, m);
  if (!emb.report.holds)
    throw Error("theorem_violation",
                "polar embedding verification failed on " + a.name());
  Mask h = emb.image;
  if (!is_filter(a, UpperSet{h}))
    throw Error("theorem_violation",
                "polar product is not a filter on " + a.name());
  Filter hf{UpperSet{h}};
  Mask left = emb.left.polar_set.set.bits;
  Mask right = emb.right.polar_set.set.bits;
  const int one = a.order().top().value();

  for (int x = 0; x < a.size(); ++x) {
    if (has_bit(h, x)) continue;
    std::optional<int> hat = nu(a, hf, bit(x)).least;
    if (!hat) continue;

    auto fail = [&](const std::string& what) -> Error {
      return Error("decomposition_failed", what + " for element " +
                                               a.label(x) + " of " + a.name());
    };
    std::optional<int> y = nu(a, hf, bit(a.to(*hat, x))).least;
    if (!y) throw fail("the least bound of the arrow image is missing");
    if (a.mul(*y, *y) != *y) throw fail("the bound is not idempotent");
    if (!has_bit(h, *y) || has_bit(left, *y) || has_bit(right, *y))
      throw fail("the bound landed in a polar");

    int y1 = -1, y2 = -1;
    for (std::size_t i = 0; i < emb.domain.size(); ++i)
      if (emb.value[i] == *y) {
        if (y1 >= 0) throw fail("the meet decomposition is ambiguous");
        y1 = emb.domain[i].first;
        y2 = emb.domain[i].second;
      }
    if (y1 < 0) throw fail("no meet decomposition");
    if (y1 == one || y2 == one) throw fail("a trivial component");
    if (a.mul(y1, y1) != y1 || a.mul(y2, y2) != y2)
      throw fail("a component is not idempotent");

    Filter f1 = generated_filter(a, bit(y1));
    Filter f2 = generated_filter(a, bit(y2));
    if (!is_normal_filter(a, f1) || !is_normal_filter(a, f2))
      throw fail("a generated filter is not normal");
    if ((f1.set & f2.set).bits != bit(one))
      throw fail("the generated filters overlap");
    return SubdirectWitness{x, *y, y1, y2, f1, f2};
  }
  return std::nullopt;
}

}  // namespace qbforge
