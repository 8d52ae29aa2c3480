#include <doctest.h>

#include "dcat/doublecat.hpp"
#include "dcat/instances.hpp"
#include "oracles.hpp"

using namespace dcat;

TEST_CASE("the one-square double category validates") {
  auto c = build_monoid_bundle(make_trivial_monoid());
  ValidationReport rep = validate_double_category(*c);
  CHECK(rep.ok());
  CHECK(rep.mode == "exhaustive");
  CHECK(c->square_count() == 1);
}

TEST_CASE("rel(2) passes the validator and its laws were derived from the relation oracle") {
  auto rel = build_rel(2);
  ValidationReport rep = validate_double_category(*rel);
  CHECK(rep.ok());
  // vcomp of stacked squares composes the frames and keeps outer edges.
  SqId u = rel->unit_square(2);  // some function [1] -> [2]
  SquareBoundary ub = rel->boundary(u);
  for (SqId t : rel->squares_with_top(ub.bottom)) {
    auto r = rel->vcomp(u, t);
    if (!r) continue;
    SquareBoundary rb = rel->boundary(*r);
    CHECK(rb.top == ub.top);
    CHECK(rb.bottom == rel->boundary(t).bottom);
  }
}

TEST_CASE("vertical and horizontal units behave") {
  auto cs = build_commuting_squares(make_path2_category());
  cs->for_each_square([&](SqId s) {
    SquareBoundary b = cs->boundary(s);
    CHECK(*cs->vcomp(cs->videntity(b.top), s) == s);
    CHECK(*cs->vcomp(s, cs->videntity(b.bottom)) == s);
    CHECK(*cs->hcomp(cs->unit_square(b.left), s) == s);
    CHECK(*cs->hcomp(s, cs->unit_square(b.right)) == s);
  });
}

TEST_CASE("unit squares compose like the vertical category") {
  auto rel = build_rel(2);
  const FiniteCategory& c0 = rel->vertical_category();
  for (VertId g = 0; g < c0.morphism_count(); ++g)
    for (VertId f = 0; f < c0.morphism_count(); ++f) {
      if (!c0.composable(g, f)) continue;
      CHECK(*rel->vcomp(rel->unit_square(f), rel->unit_square(g)) ==
            rel->unit_square(c0.raw_entry(g, f)));
    }
}

TEST_CASE("globularity is decided by the frames") {
  auto rel = build_rel(2);
  const FiniteCategory& c0 = rel->vertical_category();
  for (VertId f = 0; f < c0.morphism_count(); ++f)
    CHECK(rel->is_globular(rel->unit_square(f)) == c0.is_identity(f));
  // Count of globular squares matches the filter oracle: pairs R ⊆ S.
  long long expect = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (std::uint32_t r = 0; r < (1u << (a * b)); ++r)
        for (std::uint32_t s = 0; s < (1u << (a * b)); ++s)
          if ((r & ~s) == 0) ++expect;
  long long got = 0;
  rel->for_each_square([&](SqId s) { got += rel->is_globular(s) ? 1 : 0; });
  CHECK(got == expect);
}

TEST_CASE("stacking commuting squares follows the pointwise oracle") {
  FiniteCategory path = make_path2_category();
  auto cs = build_commuting_squares(path);
  cs->for_each_square([&](SqId s) {
    SquareBoundary sb = cs->boundary(s);
    for (SqId t : cs->squares_with_top(sb.bottom)) {
      auto r = cs->vcomp(s, t);
      if (!r) continue;
      SquareBoundary tb = cs->boundary(t), rb = cs->boundary(*r);
      CHECK(rb.left == path.raw_entry(tb.left, sb.left));
      CHECK(rb.right == path.raw_entry(tb.right, sb.right));
      CHECK(rb.top == sb.top);
      CHECK(rb.bottom == tb.bottom);
    }
  });
}

TEST_CASE("broken unit functoriality is reported") {
  // A two-vertical table where U(g∘f) is deliberately rewired.
  auto src = build_commuting_squares(make_cyclic_group_category(2));
  TableDoubleCat t = materialize(*src);
  // swap the unit square entry of the composite of the nonidentity with itself
  VertId sigma = 1;
  VertId comp = t.vertical_category().raw_entry(sigma, sigma);
  SqId old_unit = t.unit_square(comp);
  SqId other = (old_unit + 1) % t.square_count();
  t.set_unit_square(comp, other);
  ValidationReport rep = validate_double_category(t);
  CHECK(!rep.ok());
}

TEST_CASE("composition wrappers raise boundary errors") {
  auto rel = build_rel(2);
  SqId vid = rel->videntity(rel->hunit(0));
  CHECK(vcomp_sq(*rel, vid, vid) == vid);
  // frames of these two unit squares do not meet
  VertId into2 = 1, endo1 = 0;
  CHECK_THROWS_AS((void)hcomp_sq(*rel, rel->unit_square(into2), rel->unit_square(endo1)), Error);
  CHECK_THROWS_AS((void)vcomp_sq(*rel, rel->unit_square(into2), rel->unit_square(into2)), Error);
}

TEST_CASE("materialize reproduces the structure") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  TableDoubleCat t = materialize(*zdg);
  CHECK(t.square_count() == zdg->square_count());
  ValidationReport rep = validate_double_category(t);
  CHECK(rep.ok());
  CHECK(rep.mode == "exhaustive");
  for (SqId a = 0; a < t.square_count(); ++a)
    for (SqId b = 0; b < t.square_count(); ++b) {
      CHECK(t.vcomposable(a, b) == zdg->vcomposable(a, b));
      if (t.vcomposable(a, b)) CHECK(*t.vcomp(a, b) == *zdg->vcomp(a, b));
    }
}

TEST_CASE("double functor validation catches a broken square map") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  DoubleFunctorTable f;
  f.dom = f.cod = zdg.get();
  f.obj = {0};
  f.vert = {0, 1};
  f.hcell = {0};
  zdg->for_each_square([&](SqId s) { f.square[s] = s; });
  CHECK(validate_double_functor(f).ok());
  // Swap two squares with the same boundary: boundaries stay fine, but
  // composition preservation must break.
  f.square[zdg->unit_square(1)] = zdg->unit_square(1) ^ 1;
  f.square[zdg->unit_square(1) ^ 1] = zdg->unit_square(1);
  CHECK(!validate_double_functor(f).ok());
}
