#include <doctest.h>

#include "dcat/indexing.hpp"
#include "dcat/instances.hpp"
#include "fixtures.hpp"

using namespace dcat;

namespace {

// One object pair a -> b joined by a non-invertible sigma, pi2(a) the
// or-monoid, a single thin square over (sigma, sigma) that absorbs both
// elements: the factorization through U(sigma) exists but is not unique.
TableDoubleCat absorbing_bridge() {
  TableDoubleCat t;
  FiniteCategory c0;
  ObjId a = c0.add_object(), b = c0.add_object();
  MorId ia = c0.add_morphism(a, a), ib = c0.add_morphism(b, b), sg = c0.add_morphism(a, b);
  c0.finalize();
  c0.set_identity(a, ia);
  c0.set_identity(b, ib);
  c0.set_composite(ia, ia, ia);
  c0.set_composite(ib, ib, ib);
  c0.set_composite(sg, ia, sg);
  c0.set_composite(ib, sg, sg);
  t.set_vertical_category(c0);
  HorId ua = t.add_hcell(a, a), ub = t.add_hcell(b, b);
  t.set_hunit(a, ua);
  t.set_hunit(b, ub);
  t.set_hcompose(ua, ua, ua);
  t.set_hcompose(ub, ub, ub);
  SqId zero = t.add_square({ia, ia, ua, ua});
  SqId one = t.add_square({ia, ia, ua, ua});
  SqId vb = t.add_square({ib, ib, ub, ub});
  SqId u = t.add_square({sg, sg, ua, ub});
  t.set_unit_square(ia, zero);
  t.set_unit_square(ib, vb);
  t.set_unit_square(sg, u);
  t.set_videntity(ua, zero);
  t.set_videntity(ub, vb);
  auto lor = [&](SqId x, SqId y) { return (x == one || y == one) ? one : zero; };
  for (SqId x : {zero, one})
    for (SqId y : {zero, one}) {
      t.set_vcomp(x, y, lor(x, y));
      t.set_hcomp(x, y, lor(x, y));
    }
  t.set_vcomp(vb, vb, vb);
  t.set_hcomp(vb, vb, vb);
  t.set_vcomp(zero, u, u);
  t.set_vcomp(one, u, u);  // absorption: both elements slide onto u
  t.set_vcomp(u, vb, u);
  t.set_hcomp(u, u, u);
  t.finalize();
  return t;
}

}  // namespace

TEST_CASE("trivial indexing on commuting squares validates and induces") {
  auto cs = build_commuting_squares(make_path2_category());
  Pi2Indexing phi = induce_opindexing(cs);
  CHECK(validate_indexing(phi).ok());
  CHECK(check_induces(*cs, phi).ok());
  for (VertId f = 0; f < cs->vertical_category().morphism_count(); ++f) {
    CHECK(phi.hom[f].size() == 1);
    CHECK(apply_indexing(phi, f, 0) == 0);
  }
}

TEST_CASE("the group double groupoid induces the identity sliding") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Indexing phi = induce_opindexing(zdg);
  CHECK(validate_indexing(phi).ok());
  CHECK(check_induces(*zdg, phi).ok());
  // Of the two endomorphism candidates of Z/2 (identity and collapse), only
  // the identity satisfies the sliding equation; the search must agree.
  VertId sigma = 1;
  CHECK(phi.hom[sigma] == std::vector<ElemId>{0, 1});
  // and the collapse indeed fails the inducing check
  Pi2Indexing broken = phi;
  broken.hom[sigma] = {0, 0};
  ValidationReport rep = check_induces(*zdg, broken);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].law == "sliding-equation");
  CHECK(rep.violations[0].witness == std::vector<std::int64_t>{sigma, 1});
}

TEST_CASE("functoriality violations are named") {
  auto zdg = build_group_double_groupoid(4, make_cyclic_group(2));
  Pi2Indexing phi = induce_opindexing(zdg);
  REQUIRE(validate_indexing(phi).ok());
  phi.hom[2] = {0, 0};  // a valid hom, but no longer the composite of the two slides
  ValidationReport rep = validate_indexing(phi);
  REQUIRE(!rep.ok());
  bool named = false;
  for (auto& v : rep.violations)
    if (v.law == "functoriality") named = true;
  CHECK(named);
}

TEST_CASE("apply checks the direction") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Indexing phi = induce_opindexing(zdg);
  CHECK(apply_indexing(phi, 1, 1) == 1);
  CHECK_THROWS_AS((void)apply_indexing(phi, 1, 7), Error);
}

TEST_CASE("extraction fails with a witnessed error on non-sliding inputs") {
  fixtures::MisalignedDiamond d;
  REQUIRE(validate_double_category(d.cat).ok());
  // epsilon cannot slide up through U(g1): no factorization.
  CHECK_THROWS_WITH_AS((void)induce_opindexing(
                           std::shared_ptr<const DoubleCat>(&d.cat, [](const DoubleCat*) {})),
                       doctest::Contains("NoFactorization"), Error);
}

TEST_CASE("non-unique factorizations are detected") {
  TableDoubleCat t = absorbing_bridge();
  REQUIRE(validate_double_category(t).ok());
  CHECK_THROWS_WITH_AS(
      (void)induce_opindexing(std::shared_ptr<const DoubleCat>(&t, [](const DoubleCat*) {})),
      doctest::Contains("NonUniqueFactorization"), Error);
}

TEST_CASE("the indexing direction mirrors") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Indexing phi = induce_indexing(zdg);
  CHECK(phi.direction == IndexingDirection::Indexing);
  CHECK(validate_indexing(phi).ok());
  CHECK(check_induces(*zdg, phi).ok());

  auto rel2 = build_rel(2);
  FramedReport fr = is_framed(*rel2);
  auto hat = restrict_hat(rel2, &fr);
  Pi2Indexing hphi = induce_indexing(hat);
  CHECK(validate_indexing(hphi).ok());
  CHECK(check_induces(*hat, hphi).ok());
  for (auto& m : hphi.monoids) CHECK(m.presentation.size == 1);

  auto star = restrict_star(rel2);
  Pi2Indexing sphi = induce_opindexing(star);
  CHECK(validate_indexing(sphi).ok());
  CHECK(check_induces(*star, sphi).ok());
}

TEST_CASE("base mismatches are rejected") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  auto bundle = build_monoid_bundle(make_cyclic_group(2));
  Pi2Indexing phi = induce_opindexing(zdg);
  CHECK_THROWS_AS((void)rebase_indexing(phi, bundle), Error);
}
