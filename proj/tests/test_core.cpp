#include <doctest.h>

#include "dcat/core.hpp"
#include "dcat/instances.hpp"
#include "oracles.hpp"

using namespace dcat;

namespace {

FiniteCategory one_object_category() {
  FiniteCategory c;
  ObjId a = c.add_object();
  MorId id = c.add_morphism(a, a);
  c.finalize();
  c.set_identity(a, id);
  c.set_composite(id, id, id);
  return c;
}

}  // namespace

TEST_CASE("one-object category validates") {
  CHECK(validate_category(one_object_category()).ok());
}

TEST_CASE("path category matches the path-concatenation oracle") {
  // Expected composites computed by the oracle first, then frozen against the
  // library table.
  oracle::PathCat po;
  FiniteCategory c = make_path2_category();
  REQUIRE(c.morphism_count() == 6);
  // Library morphism order: i0 i1 i2 e1 e2 e21; oracle order matches.
  for (MorId g = 0; g < 6; ++g)
    for (MorId f = 0; f < 6; ++f) {
      int expect = po.compose(g, f);
      if (expect == -1) {
        CHECK(!c.composable(g, f));
      } else {
        REQUIRE(c.composable(g, f));
        CHECK(c.raw_entry(g, f) == expect);
      }
    }
  CHECK(validate_category(c).ok());
}

TEST_CASE("broken identity law names the morphism") {
  FiniteCategory c = make_path2_category();
  // e1 composed with id0 redirected to e21's slot
  c.set_composite(3, 0, 5);
  ValidationReport rep = validate_category(c);
  REQUIRE(!rep.ok());
  bool found = false;
  for (auto& v : rep.violations)
    if ((v.law == "right-identity" || v.law == "composition-endpoints") && !v.witness.empty() &&
        v.witness[0] == 3)
      found = true;
  CHECK(found);
}

TEST_CASE("compose follows first-then-second and reports errors") {
  FiniteCategory c = make_path2_category();
  CHECK(c.compose(3, 0) == 3);  // id0 then e1 = e1
  CHECK(c.compose(1, 3) == 3);  // e1 then id1 = e1
  CHECK(c.compose(4, 3) == 5);  // e1 then e2 = the length-2 path
  CHECK_THROWS_AS((void)c.compose(3, 4), Error);  // endpoints mismatch
  FiniteCategory partial = make_path2_category();
  partial.set_composite(4, 3, kNone);
  CHECK_THROWS_AS((void)partial.compose(4, 3), Error);  // MissingEntry
}

TEST_CASE("isomorphism search") {
  FiniteCategory c = make_path2_category();
  CHECK(is_isomorphism(c, 0).is_iso);
  CHECK(*is_isomorphism(c, 0).inverse == 0);
  CHECK(!is_isomorphism(c, 3).is_iso);  // path generator has no inverse

  FiniteCategory z2 = make_cyclic_group_category(2);
  IsoDecision d = is_isomorphism(z2, 1);
  CHECK(d.is_iso);
  CHECK(*d.inverse == 1);  // self-inverse, per the group table
}

TEST_CASE("monoid validation against the xor truth table") {
  CHECK(validate_monoid(make_trivial_monoid()).ok());
  CommMonoid z2 = make_cyclic_group(2);
  for (ElemId a = 0; a < 2; ++a)
    for (ElemId b = 0; b < 2; ++b) CHECK(z2.apply(a, b) == (a ^ b));
  CHECK(validate_monoid(z2).ok());

  CommMonoid broken = make_or_monoid();
  broken.op[0 * 2 + 1] = 0;  // 0*1 = 0 but 1*0 = 1
  ValidationReport rep = validate_monoid(broken);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].law == "commutativity");
  CHECK(rep.violations[0].witness == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("functor validation") {
  FiniteCategory c = make_path2_category();
  FunctorTable ident{{0, 1, 2}, {0, 1, 2, 3, 4, 5}};
  CHECK(validate_functor(ident, c, c).ok());

  FiniteCategory pt = one_object_category();
  FunctorTable constant{{0, 0, 0}, {0, 0, 0, 0, 0, 0}};
  CHECK(validate_functor(constant, c, pt).ok());

  FunctorTable broken = ident;
  broken.mor[5] = 4;  // F(e2∘e1) no longer equals F(e2)∘F(e1)
  ValidationReport rep = validate_functor(broken, c, c);
  REQUIRE(!rep.ok());
  bool found = false;
  for (auto& v : rep.violations)
    if (v.law == "preserves-composition" && v.witness == std::vector<std::int64_t>{4, 3})
      found = true;
  CHECK(found);
}

TEST_CASE("validators are pure") {
  FiniteCategory c = make_path2_category();
  ValidationReport a = validate_category(c);
  ValidationReport b = validate_category(c);
  CHECK(a.violations.size() == b.violations.size());
  CHECK(a.tuples_checked == b.tuples_checked);
}
