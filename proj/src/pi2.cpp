#include "dcat/pi2.hpp"

#include <algorithm>

namespace dcat {

ElemId Pi2Monoid::index_of(SqId s) const {
  auto it = element_index.find(s);
  if (it == element_index.end())
    throw Error(Err::RangeError, "square " + std::to_string(s) + " is not an element of pi2");
  return it->second;
}

namespace {

template <typename VComp, typename HComp>
Pi2Monoid build_pi2(ObjId a, std::vector<SqId> elems, SqId unit_sq, const VComp& vc, const HComp& hc) {
  std::sort(elems.begin(), elems.end());
  Pi2Monoid m;
  m.base_object = a;
  m.elements = std::move(elems);
  for (ElemId i = 0; i < static_cast<ElemId>(m.elements.size()); ++i)
    m.element_index[m.elements[i]] = i;

  const std::int32_t n = static_cast<std::int32_t>(m.elements.size());
  m.presentation.size = n;
  m.presentation.op.assign(static_cast<std::size_t>(n) * n, kNone);
  auto unit_it = m.element_index.find(unit_sq);
  if (unit_it == m.element_index.end())
    throw Error(Err::EckmannHiltonViolation, "unit square is not an all-identity-boundary square");
  m.presentation.unit = unit_it->second;

  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) {
      auto v = vc(m.elements[i], m.elements[j]);
      auto h = hc(m.elements[i], m.elements[j]);
      if (!v || !h)
        throw Error(Err::EckmannHiltonViolation, "pi2 pair (" + std::to_string(m.elements[i]) +
                                                     ", " + std::to_string(m.elements[j]) +
                                                     ") fails to compose");
      if (*v != *h)
        throw Error(Err::EckmannHiltonViolation,
                    "vcomp and hcomp disagree on pi2 pair (" + std::to_string(m.elements[i]) +
                        ", " + std::to_string(m.elements[j]) + ")");
      auto it = m.element_index.find(*v);
      if (it == m.element_index.end())
        throw Error(Err::EckmannHiltonViolation, "pi2 is not closed under composition");
      m.presentation.op[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < i; ++j)
      if (m.presentation.apply(i, j) != m.presentation.apply(j, i))
        throw Error(Err::EckmannHiltonViolation, "pi2 composition is not commutative at (" +
                                                     std::to_string(i) + ", " + std::to_string(j) + ")");
  return m;
}

}  // namespace

Pi2Monoid pi2_monoid(const DoubleCat& c, ObjId a) {
  const FiniteCategory& c0 = c.vertical_category();
  SquareBoundary b{c0.identity(a), c0.identity(a), c.hunit(a), c.hunit(a)};
  std::vector<SqId> elems = c.squares_with_boundary(b);
  return build_pi2(
      a, std::move(elems), c.unit_square(c0.identity(a)),
      [&](SqId x, SqId y) { return c.vcomp(x, y); }, [&](SqId x, SqId y) { return c.hcomp(x, y); });
}

Pi2Monoid pi2_monoid_2cat(const TwoCat& b, ObjId a) {
  HorId u = b.unit1(a);
  std::vector<SqId> elems;
  for (CellId x : b.cells_with_src(u))
    if (b.tgt2(x) == u) elems.push_back(x);
  return build_pi2(
      a, std::move(elems), b.identity2(u),
      [&](SqId x, SqId y) { return b.vcomp2(x, y); }, [&](SqId x, SqId y) { return b.hcomp2(x, y); });
}

ValidationReport eckmann_hilton_check(const DoubleCat& c, ObjId a) {
  ValidationReport rep;
  const FiniteCategory& c0 = c.vertical_category();
  SquareBoundary b{c0.identity(a), c0.identity(a), c.hunit(a), c.hunit(a)};
  std::vector<SqId> elems = c.squares_with_boundary(b);
  std::sort(elems.begin(), elems.end());
  for (SqId x : elems)
    for (SqId y : elems) {
      ++rep.tuples_checked;
      auto v = c.vcomp(x, y);
      auto h = c.hcomp(x, y);
      auto vr = c.vcomp(y, x);
      if (!v || !h || !vr) {
        rep.add("pi2-composable", {x, y});
        continue;
      }
      if (*v != *h) rep.add("eckmann-hilton", {x, y}, "vcomp != hcomp on pi2 squares");
      if (*v != *vr) rep.add("pi2-commutativity", {x, y});
    }
  return rep;
}

}  // namespace dcat
