#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qbforge/algebra.hpp"
#include "qbforge/catalog.hpp"
#include "qbforge/hoops.hpp"
#include "qbforge/quantale.hpp"

using namespace qbforge;

TEST_CASE("lifted set operations") {
  FiniteAlgebra g3 = catalog("godel:3");
  CHECK(lifted_mul(g3, bit(1), bit(1)) == bit(1));
  CHECK(lifted_mul(g3, 0b110, 0b110) == 0b110);
  CHECK(lifted_to(g3, 0b110, bit(0)) == bit(0));  // a->0 = 1->0 = 0
  CHECK(lifted_lto(g3, bit(2), 0b111) == 0b111);
  CHECK(lifted_mul(g3, 0, 0b111) == 0);
}

TEST_CASE("polars") {
  FiniteAlgebra p4 = catalog("prod(chain:2,chain:2)");
  CHECK(polar(p4, bit(1)).polar_set.set.bits == 12);
  CHECK(polar(p4, 0).polar_set.set == full_set(p4));
  CHECK(polar(p4, bit(3)).polar_set.set == full_set(p4));

  FiniteAlgebra g3 = catalog("godel:3");
  CHECK(polar(g3, bit(1)).polar_set.set.bits == bit(2));
  CHECK(polar(g3, bit(2)).polar_set.set == full_set(g3));

  CHECK_THROWS_WITH_AS(polar(fixtures::nc4(), bit(1)),
                       doctest::Contains("not_a_hoop"), Error);

  for (const char* name : {"godel:3", "heyting-d5", "lukasiewicz:4",
                           "prod(chain:2,chain:2)", "prod(godel:3,godel:2)"})
    CHECK_MESSAGE(polar_laws(catalog(name)).holds, name);
  CHECK(polar_laws(fixtures::bottomed_p4()).holds);
}

TEST_CASE("coprime pairs collapse") {
  for (const char* name : {"godel:3", "heyting-d5", "lukasiewicz:4",
                           "prod(chain:2,chain:2)"})
    CHECK_MESSAGE(coprime_laws(catalog(name)).holds, name);

  // concrete instance: the two middle elements of the square
  FiniteAlgebra p4 = catalog("prod(chain:2,chain:2)");
  REQUIRE(join_is_one(p4, 1, 2));
  CHECK(p4.mul(1, 2) == 0);
  CHECK(p4.mul(2, 1) == 0);
  CHECK(meet(p4, 1, 2) == 0);
  CHECK(p4.to(1, 2) == 2);
  CHECK(p4.lto(2, 1) == 1);
}

TEST_CASE("polar embedding") {
  FiniteAlgebra p4 = catalog("prod(chain:2,chain:2)");
  PairEmbedding e = polar_embedding(p4, bit(1));
  CHECK(e.report.holds);
  CHECK(e.left.polar_set.set.bits == 12);
  CHECK(e.right.polar_set.set.bits == 10);
  CHECK(e.image == 15);  // a bijection onto the square
  CHECK(e.domain.size() == 4);

  // seeding with the unit degenerates to the identity on A x {1}
  FiniteAlgebra g3 = catalog("godel:3");
  PairEmbedding id = polar_embedding(g3, bit(2));
  CHECK(id.report.holds);
  CHECK(id.left.polar_set.set == full_set(g3));
  CHECK(id.right.polar_set.set.bits == bit(2));
  CHECK(id.image == full_set(g3).bits);

  FiniteAlgebra one = catalog("godel:1");
  PairEmbedding triv = polar_embedding(one, 1);
  CHECK(triv.report.holds);
  CHECK(triv.domain.size() == 1);

  for (const char* name : {"heyting-d5", "prod(godel:3,godel:2)"}) {
    FiniteAlgebra a = catalog(name);
    for (Mask m = 0; m < (Mask{1} << a.size()); ++m)
      CHECK(polar_embedding(a, m).report.holds);
  }
}

TEST_CASE("bound sets") {
  FiniteAlgebra g3 = catalog("godel:3");
  NuResult r = nu(g3, Filter{UpperSet{6}}, bit(0));
  CHECK(r.bounds.bits == 6);
  CHECK(r.least == 1);

  FiniteAlgebra d5 = catalog("heyting-d5");
  NuResult s = nu(d5, Filter{UpperSet{24}}, bit(1) | bit(2));
  CHECK(s.bounds.bits == 24);
  CHECK(s.least == 3);

  // empty X: every member of F is a bound
  NuResult t = nu(g3, Filter{UpperSet{6}}, 0);
  CHECK(t.bounds.bits == 6);
  CHECK(t.least == 1);

  // the unit filter only ever offers the unit as a bound
  NuResult u = nu(d5, Filter{UpperSet{bit(4)}}, bit(4));
  CHECK(u.bounds.bits == bit(4));
  NuResult v = nu(g3, Filter{UpperSet{bit(2)}}, bit(0));
  CHECK(v.bounds.bits == bit(2));
  CHECK(v.least == 2);
}

TEST_CASE("bound set theorem across all inputs") {
  for (const char* name : {"godel:3", "godel:4", "heyting-d5",
                           "lukasiewicz:4", "prod(chain:2,chain:2)"}) {
    FiniteAlgebra a = catalog(name);
    for (const Filter& f : all_filters(a).filters)
      for (Mask x = 0; x < (Mask{1} << a.size()); ++x)
        CHECK_MESSAGE(nu_filter_theorem(a, f, x).holds, name);
  }
  FiniteAlgebra one = catalog("godel:1");
  CHECK(nu_filter_theorem(one, Filter{UpperSet{1}}, 1).holds);
}

TEST_CASE("normal filters") {
  // commutative algebras: every filter is normal
  for (const char* name : {"godel:3", "lukasiewicz:4", "heyting-d5"}) {
    FiniteAlgebra a = catalog(name);
    for (const Filter& f : all_filters(a).filters)
      CHECK(is_normal_filter(a, f));
  }

  // the one-sided chain separates the arrows: a -> 0 = a, a ~> 0 = b
  FiniteAlgebra c = fixtures::nc4();
  CHECK_FALSE(is_normal_filter(c, Filter{UpperSet{12}}));
  CHECK(is_normal_filter(c, Filter{UpperSet{8}}));
  CHECK(is_normal_filter(c, Filter{full_set(c)}));

  for (const char* name : {"godel:3", "godel:4", "heyting-d5",
                           "lukasiewicz:4", "prod(chain:2,chain:2)",
                           "prod(godel:3,godel:2)"})
    CHECK_MESSAGE(least_element_normal(catalog(name)).holds, name);
  CHECK(least_element_normal(fixtures::bottomed_p4()).holds);
}

TEST_CASE("subdirect reducibility witness") {
  FiniteAlgebra bp4 = fixtures::bottomed_p4();
  auto w = subdirect_witness(bp4, bit(2));
  REQUIRE(w.has_value());
  CHECK(w->x == 0);
  CHECK(w->y == 1);
  CHECK(w->y1 == 3);
  CHECK(w->y2 == 2);
  CHECK(w->f1.set.bits == 24);
  CHECK(w->f2.set.bits == 20);
  CHECK((w->f1.set & w->f2.set).bits == bit(4));
  CHECK(is_normal_filter(bp4, w->f1));
  CHECK(is_normal_filter(bp4, w->f2));

  // everything lies inside the polar product: no witness
  FiniteAlgebra p4 = catalog("prod(chain:2,chain:2)");
  CHECK_FALSE(subdirect_witness(p4, bit(1)).has_value());
  CHECK_FALSE(subdirect_witness(catalog("godel:3"), bit(1)).has_value());
  CHECK_FALSE(subdirect_witness(catalog("godel:1"), 1).has_value());

  // no seed of the five-element fixture other than the two middle
  // points can produce one either
  for (Mask m = 0; m < 32; ++m) {
    auto any = subdirect_witness(bp4, m);
    if (any) {
      CHECK((any->f1.set & any->f2.set).bits == bit(4));
      CHECK(any->y1 != 4);
      CHECK(any->y2 != 4);
    }
  }
}
