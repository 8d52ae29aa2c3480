#include "dcat/core.hpp"

namespace dcat {

const char* err_name(Err e) {
  switch (e) {
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::MissingEntry: return "MissingEntry";
    case Err::DirectionMismatch: return "DirectionMismatch";
    case Err::BaseMismatch: return "BaseMismatch";
    case Err::NotInducing: return "NotInducing";
    case Err::NoFactorization: return "NoFactorization";
    case Err::NonUniqueFactorization: return "NonUniqueFactorization";
    case Err::NotFramed: return "NotFramed";
    case Err::IllFormedComposite: return "IllFormedComposite";
    case Err::EckmannHiltonViolation: return "EckmannHiltonViolation";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SchemaError: return "SchemaError";
    case Err::RangeError: return "RangeError";
    case Err::Usage: return "Usage";
  }
  return "Unknown";
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  tuples_checked += other.tuples_checked;
  if (other.mode == "thin-structural") mode = other.mode;
}

FiniteCategory::FiniteCategory(std::int32_t object_count, std::vector<Mor> morphisms,
                               std::vector<MorId> identity, std::vector<MorId> comp_table)
    : objects_(object_count),
      mor_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp_table)) {}

bool FiniteCategory::mor_eq(const FiniteCategory& o) const {
  if (mor_.size() != o.mor_.size()) return false;
  for (std::size_t i = 0; i < mor_.size(); ++i)
    if (mor_[i].src != o.mor_[i].src || mor_[i].tgt != o.mor_[i].tgt) return false;
  return true;
}

MorId FiniteCategory::compose(MorId second, MorId first) const {
  if (!composable(second, first))
    throw Error(Err::BoundaryMismatch,
                "compose(" + std::to_string(second) + ", " + std::to_string(first) +
                    "): tgt(first) != src(second)");
  MorId r = raw_entry(second, first);
  if (r == kNone)
    throw Error(Err::MissingEntry, "composition table has no entry for (" +
                                       std::to_string(second) + ", " + std::to_string(first) + ")");
  return r;
}

std::optional<MorId> FiniteCategory::try_compose(MorId second, MorId first) const {
  if (!composable(second, first)) return std::nullopt;
  MorId r = raw_entry(second, first);
  if (r == kNone)
    throw Error(Err::MissingEntry, "composition table has no entry for (" +
                                       std::to_string(second) + ", " + std::to_string(first) + ")");
  return r;
}

ObjId FiniteCategory::add_object() {
  identity_.push_back(kNone);
  return objects_++;
}

MorId FiniteCategory::add_morphism(ObjId src, ObjId tgt) {
  mor_.push_back({src, tgt});
  comp_.clear();  // invalidated; finalize() re-sizes
  return static_cast<MorId>(mor_.size() - 1);
}

void FiniteCategory::set_composite(MorId second, MorId first, MorId result) {
  finalize();
  comp_[static_cast<std::size_t>(second) * mor_.size() + first] = result;
}

void FiniteCategory::finalize() {
  if (comp_.size() != mor_.size() * mor_.size()) comp_.assign(mor_.size() * mor_.size(), kNone);
}

ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport rep;
  const std::int32_t n = cat.morphism_count();
  for (ObjId a = 0; a < cat.object_count(); ++a) {
    MorId id = cat.identity(a);
    if (id < 0 || id >= n) {
      rep.add("identity-table", {a}, "identity of object out of range");
      continue;
    }
    if (cat.src(id) != a || cat.tgt(id) != a)
      rep.add("identity-endpoints", {a, id}, "identity morphism is not an endomorphism of its object");
  }
  if (!rep.ok()) return rep;  // endpoint data unusable

  // Totality on composable pairs + endpoint coherence of entries.
  for (MorId g = 0; g < n; ++g)
    for (MorId f = 0; f < n; ++f) {
      ++rep.tuples_checked;
      MorId r = cat.raw_entry(g, f);
      if (cat.composable(g, f)) {
        if (r == kNone) {
          rep.add("composition-total", {g, f}, "no entry for a composable pair");
        } else if (cat.src(r) != cat.src(f) || cat.tgt(r) != cat.tgt(g)) {
          rep.add("composition-endpoints", {g, f, r}, "composite has wrong endpoints");
        }
      } else if (r != kNone) {
        rep.add("composition-domain", {g, f, r}, "entry present for a non-composable pair");
      }
    }
  if (!rep.ok()) return rep;

  for (MorId f = 0; f < n; ++f) {
    ++rep.tuples_checked;
    if (cat.raw_entry(cat.identity(cat.tgt(f)), f) != f)
      rep.add("left-identity", {f}, "id∘f != f");
    if (cat.raw_entry(f, cat.identity(cat.src(f))) != f)
      rep.add("right-identity", {f}, "f∘id != f");
  }

  for (MorId h = 0; h < n; ++h)
    for (MorId g = 0; g < n; ++g) {
      if (!cat.composable(h, g)) continue;
      MorId hg = cat.raw_entry(h, g);
      for (MorId f = 0; f < n; ++f) {
        if (!cat.composable(g, f)) continue;
        ++rep.tuples_checked;
        MorId gf = cat.raw_entry(g, f);
        if (cat.raw_entry(hg, f) != cat.raw_entry(h, gf))
          rep.add("associativity", {h, g, f}, "(h∘g)∘f != h∘(g∘f)");
      }
    }
  return rep;
}

IsoDecision is_isomorphism(const FiniteCategory& cat, MorId f) {
  IsoDecision out;
  for (MorId g = 0; g < cat.morphism_count(); ++g) {
    if (cat.src(g) != cat.tgt(f) || cat.tgt(g) != cat.src(f)) continue;
    if (cat.raw_entry(g, f) == cat.identity(cat.src(f)) &&
        cat.raw_entry(f, g) == cat.identity(cat.tgt(f))) {
      out.is_iso = true;
      out.inverse = g;
      return out;
    }
  }
  return out;
}

ValidationReport validate_monoid(const CommMonoid& m) {
  ValidationReport rep;
  const std::int32_t n = m.size;
  if (m.unit < 0 || m.unit >= n) {
    rep.add("unit-range", {m.unit}, "unit out of range");
    return rep;
  }
  if (m.op.size() != static_cast<std::size_t>(n) * n) {
    rep.add("table-size", {static_cast<std::int64_t>(m.op.size())}, "operation table not n*n");
    return rep;
  }
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      ++rep.tuples_checked;
      ElemId r = m.apply(a, b);
      if (r < 0 || r >= n) {
        rep.add("totality", {a, b}, "entry out of range");
        return rep;
      }
      if (m.apply(b, a) != r) rep.add("commutativity", {a, b});
    }
  for (ElemId a = 0; a < n; ++a) {
    ++rep.tuples_checked;
    if (m.apply(m.unit, a) != a) rep.add("unit", {a});
  }
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      for (ElemId c = 0; c < n; ++c) {
        ++rep.tuples_checked;
        if (m.apply(m.apply(a, b), c) != m.apply(a, m.apply(b, c)))
          rep.add("associativity", {a, b, c});
      }
  return rep;
}

ValidationReport validate_functor(const FunctorTable& f, const FiniteCategory& dom,
                                  const FiniteCategory& cod) {
  ValidationReport rep;
  if (f.obj.size() != static_cast<std::size_t>(dom.object_count()) ||
      f.mor.size() != static_cast<std::size_t>(dom.morphism_count())) {
    rep.add("map-size", {}, "object/morphism maps are not total over the domain");
    return rep;
  }
  for (ObjId a = 0; a < dom.object_count(); ++a)
    if (f.obj[a] < 0 || f.obj[a] >= cod.object_count()) {
      rep.add("object-range", {a});
      return rep;
    }
  for (MorId m = 0; m < dom.morphism_count(); ++m) {
    if (f.mor[m] < 0 || f.mor[m] >= cod.morphism_count()) {
      rep.add("morphism-range", {m});
      return rep;
    }
    ++rep.tuples_checked;
    if (cod.src(f.mor[m]) != f.obj[dom.src(m)]) rep.add("preserves-source", {m});
    if (cod.tgt(f.mor[m]) != f.obj[dom.tgt(m)]) rep.add("preserves-target", {m});
  }
  for (ObjId a = 0; a < dom.object_count(); ++a) {
    ++rep.tuples_checked;
    if (f.mor[dom.identity(a)] != cod.identity(f.obj[a])) rep.add("preserves-identity", {a});
  }
  for (MorId g = 0; g < dom.morphism_count(); ++g)
    for (MorId m = 0; m < dom.morphism_count(); ++m) {
      if (!dom.composable(g, m)) continue;
      ++rep.tuples_checked;
      if (f.mor[dom.raw_entry(g, m)] != cod.raw_entry(f.mor[g], f.mor[m]))
        rep.add("preserves-composition", {g, m}, "F(g∘f) != F(g)∘F(f)");
    }
  return rep;
}

}  // namespace dcat
