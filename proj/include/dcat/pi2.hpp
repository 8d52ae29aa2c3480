#pragma once

#include <unordered_map>
#include <vector>

#include "dcat/doublecat.hpp"
#include "dcat/twocat.hpp"

namespace dcat {

/// The commutative monoid of squares at an object whose four boundary edges
/// are all identities. Elements are indexed in increasing square-id order.
struct Pi2Monoid {
  ObjId base_object = kNone;
  CommMonoid presentation;
  std::vector<SqId> elements;  // ElemId -> square (or 2-cell) id
  std::unordered_map<SqId, ElemId> element_index;

  ElemId index_of(SqId s) const;
};

/// Collects the all-identity-boundary squares at `a` and tabulates their
/// composition. Throws EckmannHiltonViolation when vertical and horizontal
/// composition disagree on the collected set, when the set is not closed, or
/// when commutativity fails (all signal an invalid input double category).
Pi2Monoid pi2_monoid(const DoubleCat& c, ObjId a);

/// Same computation over a 2-category (cells with unit source and target).
Pi2Monoid pi2_monoid_2cat(const TwoCat& b, ObjId a);

/// Empty iff vcomp, hcomp and the two argument orders all agree on π₂(C, a).
ValidationReport eckmann_hilton_check(const DoubleCat& c, ObjId a);

}  // namespace dcat
