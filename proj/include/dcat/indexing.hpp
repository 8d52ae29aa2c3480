#pragma once

#include <memory>

#include "dcat/pi2.hpp"
#include "dcat/twocat.hpp"

namespace dcat {

enum class IndexingDirection { Indexing, Opindexing };

/// A pi2-(op)indexing on a decorated 2-category: per object the monoid
/// pi2(B, a) and per decorating morphism a homomorphism table.
/// For f: a -> b an indexing slides down, Phi_f: pi2(a) -> pi2(b);
/// an opindexing slides up, Phi_f: pi2(b) -> pi2(a).
struct Pi2Indexing {
  IndexingDirection direction = IndexingDirection::Opindexing;
  DecoratedTwoCategory base;
  std::vector<Pi2Monoid> monoids;            // per object
  std::vector<std::vector<ElemId>> hom;      // per vertical morphism

  ObjId hom_domain(VertId f) const {
    return direction == IndexingDirection::Opindexing ? base.vertical.tgt(f)
                                                      : base.vertical.src(f);
  }
  ObjId hom_codomain(VertId f) const {
    return direction == IndexingDirection::Opindexing ? base.vertical.src(f)
                                                      : base.vertical.tgt(f);
  }
};

/// Homomorphism + functoriality + "Phi(a) is the computed pi2(B, a)" checks.
ValidationReport validate_indexing(const Pi2Indexing& phi);

/// Table lookup. Throws DirectionMismatch when x is not an element of the
/// domain monoid of Phi_f for the indexing's direction.
ElemId apply_indexing(const Pi2Indexing& phi, VertId f, ElemId x);

/// Empty iff C realizes the sliding equations of phi on every (f, element)
/// pair: opindexing (U(f) on top of φ) = (Φ_f(φ) on top of U(f)); indexing is
/// the mirror with U(f) on the bottom. Throws BaseMismatch when the decorated
/// horizontalization of c differs from phi.base.
ValidationReport check_induces(const DoubleCat& c, const Pi2Indexing& phi);

/// Extract the (op)indexing a fully faithful (resp. absolutely dense) double
/// category induces, by exhaustive unique-factorization search through unit
/// squares. Throws NoFactorization / NonUniqueFactorization with the offending
/// (f, element) in the message; the result passes validate_indexing.
Pi2Indexing induce_opindexing(std::shared_ptr<const DoubleCat> c);
Pi2Indexing induce_indexing(std::shared_ptr<const DoubleCat> c);

/// Eq-style morphism condition for a double functor between categories
/// inducing the given indexings: F(Phi_f(x)) == Phi_{F0 f}(F(x)) for all
/// (f, x). Both indexings must be view-backed over the functor's endpoints.
ValidationReport check_indexing_morphism(const DoubleFunctorTable& f, const Pi2Indexing& dom,
                                         const Pi2Indexing& cod);

/// The horizontalization view backing a pi2-indexing built by induce_*;
/// null for indexings loaded from documents.
const HorizontalizationView* indexing_view(const Pi2Indexing& phi);

/// Rebases a document-loaded indexing onto a live double category: verifies
/// phi.base equals H*(c) structurally and returns a copy whose base is the
/// view over c (so element ids resolve to squares of c).
Pi2Indexing rebase_indexing(const Pi2Indexing& phi, std::shared_ptr<const DoubleCat> c);

}  // namespace dcat
