#include "qbforge/primes.hpp"

#include <string>

#include "qbforge/types.hpp"

namespace qbforge {

namespace {

void require_integral_vee(const FiniteAlgebra& a, const std::string& who) {
  if (!a.is_residuated() || !check_integral(a) || !check_join_semilattice(a))
    throw Error("precondition",
                who + " needs an integral residuated join-semilattice");
}

void require_two_sided_vee(const FiniteAlgebra& a, const std::string& who) {
  if (!a.is_residuated() || !check_two_sided(a) || !check_join_semilattice(a))
    throw Error("precondition",
                who + " needs a two-sided residuated join-semilattice");
}

// Raw flag scan, preconditions already settled by the caller.
PrimeClassification classify_on(const FiniteAlgebra& a, const Filter& f) {
  PrimeClassification out;
  out.filter = f;
  out.to_prime = out.lto_prime = out.vee_prime = true;
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!f.set.contains(a.to(x, y)) && !f.set.contains(a.to(y, x)))
        out.to_prime = false;
      if (!f.set.contains(a.lto(x, y)) && !f.set.contains(a.lto(y, x)))
        out.lto_prime = false;
      if (f.set.contains(join(a, x, y)) && !f.set.contains(x) &&
          !f.set.contains(y))
        out.vee_prime = false;
    }
  out.prime = out.to_prime && out.lto_prime;
  return out;
}

Filter require_filter(const FiniteAlgebra& a, const Filter& f,
                      const std::string& who) {
  if (!is_filter(a, f.set))
    throw Error("precondition", who + " needs a filter");
  return f;
}

}  // namespace

PrimeClassification classify_filter(const FiniteAlgebra& a, const Filter& f) {
  require_integral_vee(a, "classify_filter");
  return classify_on(a, require_filter(a, f, "classify_filter"));
}

std::vector<PrimeClassification> classify_all(const FiniteAlgebra& a) {
  require_integral_vee(a, "classify_all");
  std::vector<PrimeClassification> out;
  for (const auto& f : all_filters(a).filters) out.push_back(classify_on(a, f));
  return out;
}

ClassReport prime_class_inclusions(const FiniteAlgebra& a) {
  ClassReport rep;
  rep.class_name = "prime_class_inclusions";
  for (const auto& c : classify_all(a)) {
    if (c.to_prime && !c.vee_prime) rep.add("to_prime_vee", {}, {c.filter.set});
    if (c.lto_prime && !c.vee_prime)
      rep.add("lto_prime_vee", {}, {c.filter.set});
    if (c.prime && !c.vee_prime) rep.add("prime_vee", {}, {c.filter.set});
    if (c.prime != (c.to_prime && c.lto_prime))
      rep.add("prime_both", {}, {c.filter.set});
  }
  return rep;
}

Filter prime_extension(const FiniteAlgebra& a, const Filter& f, int avoid) {
  require_two_sided_vee(a, "prime_extension");
  require_filter(a, f, "prime_extension");
  if (avoid < 0 || avoid >= a.size())
    throw Error("precondition", "prime_extension element out of range");
  if (f.set.contains(avoid))
    throw Error("precondition",
                "the avoided element is already in the filter");

  Filter g = f;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e = 0; e < a.size(); ++e) {
      if (g.set.contains(e)) continue;
      const Filter h = extend_filter(a, g, e);
      if (h.set.contains(avoid)) continue;
      g = h;
      grew = true;
    }
  }
  for (int e = 0; e < a.size(); ++e) {
    if (g.set.contains(e)) continue;
    if (!extend_filter(a, g, e).set.contains(avoid))
      throw Error("theorem_violation",
                  "prime_extension stopped below a maximal filter");
  }
  if (!classify_on(a, g).vee_prime)
    throw Error("theorem_violation",
                "a maximal filter avoiding an element is not join-prime");
  return g;
}

PrimeIntersection intersection_of_primes(const FiniteAlgebra& a,
                                         const Filter& f) {
  require_two_sided_vee(a, "intersection_of_primes");
  require_filter(a, f, "intersection_of_primes");
  const Mask everything = bit(a.size()) - 1;
  PrimeIntersection out;
  out.filter = f;
  out.vee_meet.set.bits = everything;
  out.prime_meet.set.bits = everything;
  for (const auto& g : all_filters(a).filters) {
    if (!f.set.subset_of(g.set)) continue;
    const auto c = classify_on(a, g);
    if (c.vee_prime) out.vee_meet.set.bits &= g.set.bits;
    if (c.prime) out.prime_meet.set.bits &= g.set.bits;
  }
  out.vee_equal = out.vee_meet == f;
  out.prime_equal = out.prime_meet == f;
  if (!out.vee_equal)
    throw Error("theorem_violation",
                "the join-prime filters above a filter meet strictly above it");
  return out;
}

ClassReport mtl_iff_theorem(const FiniteAlgebra& a) {
  require_integral_vee(a, "mtl_iff_theorem");
  const MtlFlags flags = check_mtl(a);
  bool to_eq = true, lto_eq = true, prime_eq = true;
  UpperSet to_sep, lto_sep, prime_sep;
  for (const auto& c : classify_all(a)) {
    if (to_eq && c.to_prime != c.vee_prime) {
      to_eq = false;
      to_sep = c.filter.set;
    }
    if (lto_eq && c.lto_prime != c.vee_prime) {
      lto_eq = false;
      lto_sep = c.filter.set;
    }
    if (prime_eq && c.prime != c.vee_prime) {
      prime_eq = false;
      prime_sep = c.filter.set;
    }
  }
  // a failing side carries its witness: the separating filter when the
  // classes differ, the non-prelinear pair when the arrows do
  const auto bad_pair = [&](bool use_to) -> std::vector<int> {
    const int n = a.size();
    const int one = *a.unit();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = use_to ? a.to(x, y) : a.lto(x, y);
        const int yx = use_to ? a.to(y, x) : a.lto(y, x);
        if (join(a, xy, yx) != one) return {x, y};
      }
    return {};
  };
  ClassReport rep;
  rep.class_name = "mtl_iff";
  if (flags.to_mtl != to_eq)
    rep.add("to_mtl_iff", flags.to_mtl ? std::vector<int>{} : bad_pair(true),
            {to_sep});
  if (flags.lto_mtl != lto_eq)
    rep.add("lto_mtl_iff",
            flags.lto_mtl ? std::vector<int>{} : bad_pair(false), {lto_sep});
  if (flags.pseudo_mtl != prime_eq)
    rep.add("pseudo_mtl_iff", {}, {prime_sep});
  return rep;
}

ClassReport join_distribution_laws(const FiniteAlgebra& a) {
  if (!a.has_mul() || !check_join_semilattice(a))
    throw Error("precondition",
                "join_distribution_laws needs a product over a "
                "join-semilattice");
  ClassReport rep;
  rep.class_name = "join_distribution";
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int j = join(a, y, z);
        if (a.mul(x, j) != join(a, a.mul(x, y), a.mul(x, z)))
          rep.add("mul_join_right", {x, y, z});
        if (a.mul(j, x) != join(a, a.mul(y, x), a.mul(z, x)))
          rep.add("mul_join_left", {x, y, z});
      }
  return rep;
}

}  // namespace qbforge
