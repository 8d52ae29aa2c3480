#include <doctest.h>

#include "dcat/instances.hpp"
#include "dcat/pi2.hpp"

using namespace dcat;

TEST_CASE("rel has one-element pi2 everywhere") {
  for (int n = 1; n <= 2; ++n) {
    auto rel = build_rel(n);
    for (ObjId a = 0; a < rel->vertical_category().object_count(); ++a) {
      Pi2Monoid m = pi2_monoid(*rel, a);
      // Independent count: identity boundaries force the identity inclusion.
      CHECK(m.presentation.size == 1);
      CHECK(m.elements[0] == rel->unit_square(rel->vertical_category().identity(a)));
      CHECK(eckmann_hilton_check(*rel, a).ok());
    }
  }
}

TEST_CASE("commuting squares have trivial pi2") {
  auto cs = build_commuting_squares(make_path2_category());
  for (ObjId a = 0; a < 3; ++a) CHECK(pi2_monoid(*cs, a).presentation.size == 1);
  auto zs = build_commuting_squares(make_cyclic_group_category(2));
  CHECK(pi2_monoid(*zs, 0).presentation.size == 1);
}

TEST_CASE("monoid bundles realize their pi2") {
  CommMonoid z2 = make_cyclic_group(2);
  auto bundle = build_monoid_bundle(z2);
  Pi2Monoid m = pi2_monoid(*bundle, 0);
  CHECK(m.presentation == z2);  // ids align: elements are squares 0..n-1
  CHECK(validate_monoid(m.presentation).ok());

  CommMonoid z4 = make_cyclic_group(4);
  CHECK(pi2_monoid(*build_monoid_bundle(z4), 0).presentation == z4);

  // Round trip up to relabeling: rebuilding the bundle from the computed
  // presentation reproduces it.
  auto again = build_monoid_bundle(m.presentation);
  CHECK(pi2_monoid(*again, 0).presentation == z2);
}

TEST_CASE("group double groupoid pi2 is the coefficient monoid") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Monoid m = pi2_monoid(*zdg, 0);
  CHECK(m.presentation == make_cyclic_group(2));
  CHECK(m.elements.size() == 2);
  for (ElemId i = 0; i < 2; ++i) CHECK(m.element_index.at(m.elements[i]) == i);
  CHECK(eckmann_hilton_check(*zdg, 0).ok());
}

TEST_CASE("a broken square table trips the Eckmann-Hilton guard") {
  // Two pi2 squares whose vertical and horizontal composites disagree.
  TableDoubleCat t;
  FiniteCategory c0;
  ObjId o = c0.add_object();
  MorId id = c0.add_morphism(o, o);
  c0.finalize();
  c0.set_identity(o, id);
  c0.set_composite(id, id, id);
  t.set_vertical_category(c0);
  HorId u = t.add_hcell(o, o);
  t.set_hunit(o, u);
  t.set_hcompose(u, u, u);
  SqId e = t.add_square({id, id, u, u});
  SqId x = t.add_square({id, id, u, u});
  t.set_unit_square(id, e);
  t.set_videntity(u, e);
  // vcomp is xor, hcomp is constant-e: not a valid double category, and the
  // pi2 builder must refuse it.
  t.set_vcomp(e, e, e);
  t.set_vcomp(e, x, x);
  t.set_vcomp(x, e, x);
  t.set_vcomp(x, x, e);
  t.set_hcomp(e, e, e);
  t.set_hcomp(e, x, e);
  t.set_hcomp(x, e, e);
  t.set_hcomp(x, x, e);
  t.finalize();
  CHECK_THROWS_AS((void)pi2_monoid(t, 0), Error);
  CHECK(!eckmann_hilton_check(t, 0).ok());
  CHECK(!validate_double_category(t).ok());
}

TEST_CASE("pi2 squares are closed under both compositions") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Monoid m = pi2_monoid(*zdg, 0);
  for (SqId a : m.elements)
    for (SqId b : m.elements) {
      CHECK(m.element_index.count(*zdg->vcomp(a, b)));
      CHECK(m.element_index.count(*zdg->hcomp(a, b)));
    }
}
