#include "dcat/twocat.hpp"

#include <algorithm>

namespace dcat {

void FiniteTwoCategory::set_object_count(std::int32_t n) {
  objects_ = n;
  unit1_.assign(n, kNone);
}

HorId FiniteTwoCategory::add_one_cell(ObjId src, ObjId tgt) {
  src1_.push_back(src);
  tgt1_.push_back(tgt);
  return static_cast<HorId>(src1_.size() - 1);
}

void FiniteTwoCategory::set_compose1(HorId left, HorId right, HorId result) {
  comp1_[key(left, right)] = result;
}

CellId FiniteTwoCategory::add_cell(HorId src, HorId tgt) {
  csrc_.push_back(src);
  ctgt_.push_back(tgt);
  return static_cast<CellId>(csrc_.size() - 1);
}

void FiniteTwoCategory::set_vcomp2(CellId a, CellId b, CellId r) { v2_[key(a, b)] = r; }
void FiniteTwoCategory::set_hcomp2(CellId a, CellId b, CellId r) { h2_[key(a, b)] = r; }

void FiniteTwoCategory::finalize() {
  id2_.resize(src1_.size(), kNone);
  by_src_.assign(src1_.size(), {});
  by_tgt_.assign(src1_.size(), {});
  for (CellId x = 0; x < cell_count(); ++x) {
    by_src_[csrc_[x]].push_back(x);
    by_tgt_[ctgt_[x]].push_back(x);
  }
}

HorId FiniteTwoCategory::compose1(HorId left, HorId right) const {
  auto it = comp1_.find(key(left, right));
  if (it == comp1_.end())
    throw Error(Err::MissingEntry, "1-cell composition has no entry for (" + std::to_string(left) +
                                       ", " + std::to_string(right) + ")");
  return it->second;
}

std::optional<CellId> FiniteTwoCategory::vcomp2(CellId top, CellId bottom) const {
  if (!vcomposable2(top, bottom)) return std::nullopt;
  auto it = v2_.find(key(top, bottom));
  if (it == v2_.end())
    throw Error(Err::MissingEntry, "vcomp2 has no entry for (" + std::to_string(top) + ", " +
                                       std::to_string(bottom) + ")");
  return it->second;
}

std::optional<CellId> FiniteTwoCategory::hcomp2(CellId left, CellId right) const {
  if (!hcomposable2(left, right)) return std::nullopt;
  auto it = h2_.find(key(left, right));
  if (it == h2_.end())
    throw Error(Err::MissingEntry, "hcomp2 has no entry for (" + std::to_string(left) + ", " +
                                       std::to_string(right) + ")");
  return it->second;
}

HorizontalizationView::HorizontalizationView(std::shared_ptr<const DoubleCat> base)
    : base_(std::move(base)) {
  objects_ = base_->vertical_category().object_count();
  src1_.resize(base_->hcell_count());
  tgt1_.resize(base_->hcell_count());
  unit1_.resize(objects_);
  for (HorId h = 0; h < base_->hcell_count(); ++h) {
    src1_[h] = base_->hsrc(h);
    tgt1_[h] = base_->htgt(h);
  }
  for (ObjId a = 0; a < objects_; ++a) unit1_[a] = base_->hunit(a);

  base_->for_each_square([&](SqId s) {
    if (base_->is_globular(s)) parent_.push_back(s);
  });
  std::sort(parent_.begin(), parent_.end());
  by_src_.assign(src1_.size(), {});
  by_tgt_.assign(src1_.size(), {});
  for (CellId x = 0; x < static_cast<CellId>(parent_.size()); ++x) {
    reverse_[parent_[x]] = x;
    SquareBoundary b = base_->boundary(parent_[x]);
    by_src_[b.top].push_back(x);
    by_tgt_[b.bottom].push_back(x);
  }
}

std::optional<CellId> HorizontalizationView::cell_of_square(SqId s) const {
  auto it = reverse_.find(s);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

CellId HorizontalizationView::identity2(HorId h) const {
  return reverse_.at(base_->videntity(h));
}

std::optional<CellId> HorizontalizationView::vcomp2(CellId top, CellId bottom) const {
  if (!vcomposable2(top, bottom)) return std::nullopt;
  auto r = base_->vcomp(parent_[top], parent_[bottom]);
  if (!r) return std::nullopt;
  return reverse_.at(*r);
}

std::optional<CellId> HorizontalizationView::hcomp2(CellId left, CellId right) const {
  if (!hcomposable2(left, right)) return std::nullopt;
  auto r = base_->hcomp(parent_[left], parent_[right]);
  if (!r) return std::nullopt;
  return reverse_.at(*r);
}

ValidationReport validate_two_category(const TwoCat& b, const ValidateOptions& opt) {
  ValidationReport rep;
  std::uint64_t budget = opt.max_tuples;
  auto spend = [&](std::uint64_t n = 1) {
    if (budget < n) return false;
    budget -= n;
    return true;
  };
  const std::int32_t nh = b.one_cell_count();

  auto composable1 = [&](HorId l, HorId r) {
    return b.tgt1(l) == b.src1(r) && b.compose1_within(l, r);
  };
  for (ObjId a = 0; a < b.object_count(); ++a) {
    HorId u = b.unit1(a);
    if (u < 0 || u >= nh || b.src1(u) != a || b.tgt1(u) != a) rep.add("unit1-endpoints", {a, u});
  }
  if (!rep.ok()) return rep;
  for (HorId l = 0; l < nh; ++l)
    for (HorId r = 0; r < nh; ++r) {
      if (!composable1(l, r)) continue;
      spend();
      HorId x = b.compose1(l, r);
      if (b.src1(x) != b.src1(l) || b.tgt1(x) != b.tgt1(r)) rep.add("compose1-endpoints", {l, r, x});
    }
  if (!rep.ok()) return rep;
  for (HorId h = 0; h < nh; ++h) {
    if (!composable1(b.unit1(b.src1(h)), h) || b.compose1(b.unit1(b.src1(h)), h) != h)
      rep.add("compose1-left-unit", {h});
    if (!composable1(h, b.unit1(b.tgt1(h))) || b.compose1(h, b.unit1(b.tgt1(h))) != h)
      rep.add("compose1-right-unit", {h});
  }
  for (HorId f = 0; f < nh; ++f)
    for (HorId g = 0; g < nh; ++g) {
      if (!composable1(f, g)) continue;
      HorId fg = b.compose1(f, g);
      for (HorId h = 0; h < nh; ++h) {
        if (!composable1(g, h)) continue;
        HorId gh = b.compose1(g, h);
        if (!composable1(fg, h) || !composable1(f, gh)) continue;
        if (!spend()) {
          rep.add("budget", {}, "1-cell associativity sweep exceeded budget");
          return rep;
        }
        if (b.compose1(fg, h) != b.compose1(f, gh)) rep.add("compose1-associativity", {f, g, h});
      }
    }
  if (!rep.ok()) return rep;

  const CellId nc = b.cell_count();
  for (CellId x = 0; x < nc; ++x) {
    HorId s = b.src2(x), t = b.tgt2(x);
    if (s < 0 || s >= nh || t < 0 || t >= nh || b.src1(s) != b.src1(t) || b.tgt1(s) != b.tgt1(t))
      rep.add("cell-parallel", {x}, "2-cell boundary 1-cells are not parallel");
  }
  if (!rep.ok()) return rep;
  for (HorId h = 0; h < nh; ++h) {
    CellId i = b.identity2(h);
    if (i < 0 || i >= nc || b.src2(i) != h || b.tgt2(i) != h) rep.add("identity2-boundary", {h, i});
  }
  if (!rep.ok()) return rep;

  for (CellId x = 0; x < nc; ++x) {
    if (!spend(2)) {
      rep.add("budget", {}, "2-cell unit sweep exceeded budget");
      return rep;
    }
    auto top = b.vcomp2(b.identity2(b.src2(x)), x);
    auto bot = b.vcomp2(x, b.identity2(b.tgt2(x)));
    if (!top || *top != x || !bot || *bot != x) rep.add("vcomp2-units", {x});
    auto l = b.hcomp2(b.identity2(b.unit1(b.src1(b.src2(x)))), x);
    auto r = b.hcomp2(x, b.identity2(b.unit1(b.tgt1(b.src2(x)))));
    if (!l || *l != x || !r || *r != x) rep.add("hcomp2-units", {x});
  }
  if (!rep.ok()) return rep;

  // Totality + boundary coherence on legal pairs.
  for (CellId x = 0; x < nc; ++x) {
    for (CellId y : b.cells_with_src(b.tgt2(x))) {
      if (!spend()) {
        rep.add("budget", {}, "vcomp2 sweep exceeded budget");
        return rep;
      }
      auto r = b.vcomp2(x, y);
      if (!r || b.src2(*r) != b.src2(x) || b.tgt2(*r) != b.tgt2(y)) rep.add("vcomp2-boundary", {x, y});
    }
    for (CellId y = 0; y < nc; ++y) {
      if (!b.hcomposable2(x, y)) continue;
      if (!spend()) {
        rep.add("budget", {}, "hcomp2 sweep exceeded budget");
        return rep;
      }
      auto r = b.hcomp2(x, y);
      if (!r || b.src2(*r) != b.compose1(b.src2(x), b.src2(y)) ||
          b.tgt2(*r) != b.compose1(b.tgt2(x), b.tgt2(y)))
        rep.add("hcomp2-boundary", {x, y});
    }
  }
  if (!rep.ok()) return rep;

  for (CellId x = 0; x < nc; ++x)
    for (CellId y : b.cells_with_src(b.tgt2(x))) {
      CellId xy = *b.vcomp2(x, y);
      for (CellId z : b.cells_with_src(b.tgt2(y))) {
        if (!spend()) {
          rep.add("budget", {}, "vcomp2 associativity exceeded budget");
          return rep;
        }
        if (*b.vcomp2(xy, z) != *b.vcomp2(x, *b.vcomp2(y, z))) rep.add("vcomp2-associativity", {x, y, z});
      }
    }
  for (CellId x = 0; x < nc; ++x)
    for (CellId y = 0; y < nc; ++y) {
      if (!b.hcomposable2(x, y)) continue;
      CellId xy = *b.hcomp2(x, y);
      for (CellId z = 0; z < nc; ++z) {
        if (!b.hcomposable2(y, z)) continue;
        if (!spend()) {
          rep.add("budget", {}, "hcomp2 associativity exceeded budget");
          return rep;
        }
        if (*b.hcomp2(xy, z) != *b.hcomp2(x, *b.hcomp2(y, z))) rep.add("hcomp2-associativity", {x, y, z});
      }
    }
  if (!rep.ok()) return rep;

  // Interchange: (δ⊟γ)□(β⊟α) over 2x2 grids.
  for (CellId a = 0; a < nc; ++a)
    for (CellId bb : b.cells_with_src(b.tgt2(a))) {  // a over bb
      for (CellId x = 0; x < nc; ++x) {
        if (!b.hcomposable2(a, x)) continue;
        for (CellId y : b.cells_with_src(b.tgt2(x))) {  // x over y, to the right
          if (!spend()) {
            rep.add("budget", {}, "interchange sweep exceeded budget");
            return rep;
          }
          if (*b.hcomp2(*b.vcomp2(a, bb), *b.vcomp2(x, y)) !=
              *b.vcomp2(*b.hcomp2(a, x), *b.hcomp2(bb, y)))
            rep.add("interchange", {a, bb, x, y});
        }
      }
    }
  rep.tuples_checked = opt.max_tuples - budget;
  return rep;
}

ValidationReport validate_decoration(const DecoratedTwoCategory& d) {
  ValidationReport rep;
  if (d.two_cat->object_count() != d.vertical.object_count())
    rep.add("decoration-objects",
            {d.two_cat->object_count(), d.vertical.object_count()},
            "2-category and vertical category have different object sets");
  return rep;
}

DecoratedTwoCategory decorated_horizontalization(std::shared_ptr<const DoubleCat> c) {
  DecoratedTwoCategory d;
  d.vertical = c->vertical_category();
  d.two_cat = std::make_shared<HorizontalizationView>(std::move(c));
  return d;
}

FiniteTwoCategory materialize_two_category(const TwoCat& b, const ValidateOptions& opt) {
  if (static_cast<std::uint64_t>(b.cell_count()) > opt.max_tuples)
    throw Error(Err::BudgetExceeded, "materialize_two_category: too many 2-cells");
  FiniteTwoCategory out;
  out.set_object_count(b.object_count());
  for (HorId h = 0; h < b.one_cell_count(); ++h) out.add_one_cell(b.src1(h), b.tgt1(h));
  for (ObjId a = 0; a < b.object_count(); ++a) out.set_unit1(a, b.unit1(a));
  for (HorId l = 0; l < b.one_cell_count(); ++l)
    for (HorId r = 0; r < b.one_cell_count(); ++r)
      if (b.tgt1(l) == b.src1(r) && b.compose1_within(l, r))
        out.set_compose1(l, r, b.compose1(l, r));
  for (CellId x = 0; x < b.cell_count(); ++x) out.add_cell(b.src2(x), b.tgt2(x));
  for (HorId h = 0; h < b.one_cell_count(); ++h) out.set_identity2(h, b.identity2(h));
  std::uint64_t pairs = 0;
  for (CellId x = 0; x < b.cell_count(); ++x)
    for (CellId y = 0; y < b.cell_count(); ++y) {
      if (b.vcomposable2(x, y)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "two-category pair budget");
        out.set_vcomp2(x, y, *b.vcomp2(x, y));
      }
      if (b.hcomposable2(x, y)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "two-category pair budget");
        out.set_hcomp2(x, y, *b.hcomp2(x, y));
      }
    }
  out.finalize();
  return out;
}

bool decorated_equal(const DecoratedTwoCategory& a, const DecoratedTwoCategory& b) {
  if (!(a.vertical == b.vertical)) return false;
  const TwoCat& x = *a.two_cat;
  const TwoCat& y = *b.two_cat;
  if (x.object_count() != y.object_count() || x.one_cell_count() != y.one_cell_count() ||
      x.cell_count() != y.cell_count())
    return false;
  for (HorId h = 0; h < x.one_cell_count(); ++h)
    if (x.src1(h) != y.src1(h) || x.tgt1(h) != y.tgt1(h)) return false;
  for (ObjId o = 0; o < x.object_count(); ++o)
    if (x.unit1(o) != y.unit1(o)) return false;
  for (CellId c = 0; c < x.cell_count(); ++c)
    if (x.src2(c) != y.src2(c) || x.tgt2(c) != y.tgt2(c)) return false;
  return true;
}

}  // namespace dcat
