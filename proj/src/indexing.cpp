#include "dcat/indexing.hpp"

namespace dcat {

const HorizontalizationView* indexing_view(const Pi2Indexing& phi) {
  return dynamic_cast<const HorizontalizationView*>(phi.base.two_cat.get());
}

ValidationReport validate_indexing(const Pi2Indexing& phi) {
  ValidationReport rep = validate_decoration(phi.base);
  const FiniteCategory& bstar = phi.base.vertical;
  const TwoCat& b = *phi.base.two_cat;

  if (phi.monoids.size() != static_cast<std::size_t>(bstar.object_count()) ||
      phi.hom.size() != static_cast<std::size_t>(bstar.morphism_count())) {
    rep.add("table-shape", {}, "per-object or per-morphism tables are not total");
    return rep;
  }

  // Phi(a) must be the computed pi2(B, a), elementwise.
  for (ObjId a = 0; a < bstar.object_count(); ++a) {
    Pi2Monoid computed = pi2_monoid_2cat(b, a);
    ++rep.tuples_checked;
    if (!(computed.presentation == phi.monoids[a].presentation) ||
        computed.elements != phi.monoids[a].elements)
      rep.add("pi2-identification", {a}, "stored monoid differs from the computed pi2");
  }
  if (!rep.ok()) return rep;

  for (VertId f = 0; f < bstar.morphism_count(); ++f) {
    const CommMonoid& dom = phi.monoids[phi.hom_domain(f)].presentation;
    const CommMonoid& cod = phi.monoids[phi.hom_codomain(f)].presentation;
    const std::vector<ElemId>& t = phi.hom[f];
    if (t.size() != static_cast<std::size_t>(dom.size)) {
      rep.add("hom-shape", {f});
      continue;
    }
    for (ElemId x = 0; x < dom.size; ++x)
      if (t[x] < 0 || t[x] >= cod.size) rep.add("hom-range", {f, x});
    if (!rep.ok()) return rep;
    if (t[dom.unit] != cod.unit) rep.add("hom-unit", {f});
    for (ElemId x = 0; x < dom.size; ++x)
      for (ElemId y = 0; y < dom.size; ++y) {
        ++rep.tuples_checked;
        if (t[dom.apply(x, y)] != cod.apply(t[x], t[y]))
          rep.add("hom-multiplicative", {f, x, y});
      }
    if (bstar.is_identity(f)) {
      for (ElemId x = 0; x < dom.size; ++x)
        if (t[x] != x) rep.add("functor-identity", {f, x});
    }
  }
  if (!rep.ok()) return rep;

  // Functoriality over composable pairs.
  for (VertId g = 0; g < bstar.morphism_count(); ++g)
    for (VertId f = 0; f < bstar.morphism_count(); ++f) {
      if (!bstar.composable(g, f)) continue;
      VertId gf = bstar.raw_entry(g, f);
      const CommMonoid& dom = phi.monoids[phi.hom_domain(gf)].presentation;
      for (ElemId x = 0; x < dom.size; ++x) {
        ++rep.tuples_checked;
        // Opindexing is contravariant: Phi_{g∘f} = Phi_f ∘ Phi_g.
        ElemId lhs = phi.hom[gf][x];
        ElemId rhs = phi.direction == IndexingDirection::Opindexing
                         ? phi.hom[f][phi.hom[g][x]]
                         : phi.hom[g][phi.hom[f][x]];
        if (lhs != rhs) rep.add("functoriality", {g, f, x});
      }
    }
  return rep;
}

ElemId apply_indexing(const Pi2Indexing& phi, VertId f, ElemId x) {
  const CommMonoid& dom = phi.monoids[phi.hom_domain(f)].presentation;
  if (x < 0 || x >= dom.size)
    throw Error(Err::DirectionMismatch,
                "element " + std::to_string(x) + " is not in the domain monoid of morphism " +
                    std::to_string(f) + " for this direction");
  return phi.hom[f][x];
}

namespace {

// The view over c that phi's element ids live in. Either phi was built from c
// (its base is a view whose backing is c), or phi.base must equal H*(c)
// structurally, in which case a fresh view gives the same cell numbering.
std::shared_ptr<const HorizontalizationView> view_over(const DoubleCat& c, const Pi2Indexing& phi) {
  if (auto* v = indexing_view(phi); v && &v->base() == &c)
    return std::static_pointer_cast<const HorizontalizationView>(phi.base.two_cat);
  return nullptr;
}

}  // namespace

Pi2Indexing rebase_indexing(const Pi2Indexing& phi, std::shared_ptr<const DoubleCat> c) {
  DecoratedTwoCategory dec = decorated_horizontalization(std::move(c));
  if (!decorated_equal(dec, phi.base))
    throw Error(Err::BaseMismatch, "indexing base differs from the decorated horizontalization");
  Pi2Indexing out = phi;
  out.base = std::move(dec);
  return out;
}

ValidationReport check_induces(const DoubleCat& c, const Pi2Indexing& phi) {
  std::shared_ptr<const HorizontalizationView> view = view_over(c, phi);
  const Pi2Indexing* use = &phi;
  Pi2Indexing rebased;
  if (!view) {
    // Document-loaded phi: verify the base matches and renumber through a
    // fresh view (throws BaseMismatch on disagreement).
    auto self = std::shared_ptr<const DoubleCat>(&c, [](const DoubleCat*) {});
    rebased = rebase_indexing(phi, self);
    view = std::static_pointer_cast<const HorizontalizationView>(rebased.base.two_cat);
    use = &rebased;
  }

  ValidationReport rep;
  const FiniteCategory& c0 = c.vertical_category();
  const bool op = use->direction == IndexingDirection::Opindexing;
  for (VertId f = 0; f < c0.morphism_count(); ++f) {
    const Pi2Monoid& dom = use->monoids[use->hom_domain(f)];
    for (ElemId x = 0; x < dom.presentation.size; ++x) {
      ++rep.tuples_checked;
      SqId phi_sq = view->parent_square(dom.elements[x]);
      SqId img_sq =
          view->parent_square(use->monoids[use->hom_codomain(f)].elements[use->hom[f][x]]);
      SqId u = c.unit_square(f);
      std::optional<SqId> lhs, rhs;
      if (op) {
        lhs = c.vcomp(u, phi_sq);
        rhs = c.vcomp(img_sq, u);
      } else {
        lhs = c.vcomp(phi_sq, u);
        rhs = c.vcomp(u, img_sq);
      }
      if (!lhs || !rhs || *lhs != *rhs)
        rep.add("sliding-equation", {f, x}, "the inducing equation fails at this (f, element)");
    }
  }
  return rep;
}

namespace {

Pi2Indexing induce(std::shared_ptr<const DoubleCat> cp, IndexingDirection dir) {
  const DoubleCat& c = *cp;
  const FiniteCategory& c0 = c.vertical_category();
  Pi2Indexing phi;
  phi.direction = dir;
  phi.base = decorated_horizontalization(cp);
  auto view = std::static_pointer_cast<const HorizontalizationView>(phi.base.two_cat);

  phi.monoids.reserve(c0.object_count());
  for (ObjId a = 0; a < c0.object_count(); ++a) phi.monoids.push_back(pi2_monoid_2cat(*view, a));

  phi.hom.resize(c0.morphism_count());
  const bool op = dir == IndexingDirection::Opindexing;
  for (VertId f = 0; f < c0.morphism_count(); ++f) {
    const Pi2Monoid& dom = phi.monoids[phi.hom_domain(f)];
    const Pi2Monoid& cod = phi.monoids[phi.hom_codomain(f)];
    phi.hom[f].assign(dom.presentation.size, kNone);
    SqId u = c.unit_square(f);
    for (ElemId x = 0; x < dom.presentation.size; ++x) {
      SqId x_sq = view->parent_square(dom.elements[x]);
      SqId target = op ? *c.vcomp(u, x_sq) : *c.vcomp(x_sq, u);
      ElemId found = kNone;
      for (ElemId y = 0; y < cod.presentation.size; ++y) {
        SqId y_sq = view->parent_square(cod.elements[y]);
        SqId cand = op ? *c.vcomp(y_sq, u) : *c.vcomp(u, y_sq);
        if (cand != target) continue;
        if (found != kNone)
          throw Error(Err::NonUniqueFactorization,
                      "two factorizations through the unit square of morphism " +
                          std::to_string(f) + " at element " + std::to_string(x));
        found = y;
      }
      if (found == kNone)
        throw Error(Err::NoFactorization,
                    "no factorization through the unit square of morphism " + std::to_string(f) +
                        " at element " + std::to_string(x) +
                        (op ? " (morphism is not fully faithful)"
                            : " (morphism is not absolutely dense)"));
      phi.hom[f][x] = found;
    }
  }

  ValidationReport rep = validate_indexing(phi);
  if (!rep.ok())
    throw Error(Err::NoFactorization,
                "extracted tables violate " + rep.violations.front().law +
                    "; the input does not induce an indexing");
  return phi;
}

}  // namespace

Pi2Indexing induce_opindexing(std::shared_ptr<const DoubleCat> c) {
  return induce(std::move(c), IndexingDirection::Opindexing);
}

Pi2Indexing induce_indexing(std::shared_ptr<const DoubleCat> c) {
  return induce(std::move(c), IndexingDirection::Indexing);
}

ValidationReport check_indexing_morphism(const DoubleFunctorTable& f, const Pi2Indexing& dom,
                                         const Pi2Indexing& cod) {
  ValidationReport rep;
  const HorizontalizationView* dv = indexing_view(dom);
  const HorizontalizationView* cv = indexing_view(cod);
  if (!dv || &dv->base() != f.dom || !cv || &cv->base() != f.cod)
    throw Error(Err::BaseMismatch, "indexings must be view-backed over the functor's endpoints");
  if (dom.direction != cod.direction)
    throw Error(Err::DirectionMismatch, "indexings have different directions");

  const FiniteCategory& d0 = f.dom->vertical_category();
  for (VertId v = 0; v < d0.morphism_count(); ++v) {
    const Pi2Monoid& dm = dom.monoids[dom.hom_domain(v)];
    const Pi2Monoid& cm_dom = cod.monoids[cod.hom_domain(f.vert[v])];
    const Pi2Monoid& cm_cod = cod.monoids[cod.hom_codomain(f.vert[v])];
    for (ElemId x = 0; x < dm.presentation.size; ++x) {
      ++rep.tuples_checked;
      // F(Phi_f(x))
      SqId lhs_sq = f.map_square(
          dv->parent_square(dom.monoids[dom.hom_codomain(v)].elements[dom.hom[v][x]]));
      // Phi_{F0 f}(F(x))
      SqId fx_sq = f.map_square(dv->parent_square(dm.elements[x]));
      auto fx_cell = cv->cell_of_square(fx_sq);
      if (!fx_cell) {
        rep.add("image-not-globular", {v, x});
        continue;
      }
      ElemId fx = cm_dom.index_of(*fx_cell);
      SqId rhs_sq = cv->parent_square(cm_cod.elements[cod.hom[f.vert[v]][fx]]);
      if (lhs_sq != rhs_sq) rep.add("indexing-morphism", {v, x}, "F(Phi_f(x)) != Phi_{F0 f}(F(x))");
    }
  }
  return rep;
}

}  // namespace dcat
