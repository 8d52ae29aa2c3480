#include "dcat/crossprod.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <unordered_set>

#include "dcat/length.hpp"

namespace dcat {

namespace {

std::tuple<int, CellId, CellId, VertId, CellId> cp_order_key(const CpSquare& q) {
  return {q.is_globular ? 0 : 1, q.cell, q.down, q.mid, q.up};
}

CellId require_cell(std::optional<CellId> c, const char* what) {
  if (!c) throw Error(Err::IllFormedComposite, std::string("2-cell composite undefined in ") + what);
  return *c;
}

}  // namespace

CpEqualDecision cp_equal(const Pi2Indexing& phi, const CpSquare& s, const CpSquare& t) {
  const TwoCat& b = *phi.base.two_cat;
  if (s.is_globular != t.is_globular)
    throw Error(Err::BoundaryMismatch, "cannot compare a globular square with a triple");
  if (s.is_globular) {
    if (b.src2(s.cell) != b.src2(t.cell) || b.tgt2(s.cell) != b.tgt2(t.cell))
      throw Error(Err::BoundaryMismatch, "globular squares have different boundaries");
    return {s.cell == t.cell, std::nullopt};
  }
  if (s.mid != t.mid || b.src2(s.up) != b.src2(t.up) || b.tgt2(s.down) != b.tgt2(t.down))
    throw Error(Err::BoundaryMismatch, "triples have different boundaries");

  const bool op = phi.direction == IndexingDirection::Opindexing;
  const ObjId at = op ? phi.base.vertical.tgt(s.mid) : phi.base.vertical.src(s.mid);
  const Pi2Monoid& pi = phi.monoids[at];
  for (ElemId nu = 0; nu < pi.presentation.size; ++nu) {
    CellId nu_cell = pi.elements[nu];
    CellId image_cell =
        phi.monoids[op ? phi.base.vertical.src(s.mid) : phi.base.vertical.tgt(s.mid)]
            .elements[phi.hom[s.mid][nu]];
    bool ok;
    if (op) {
      // s.down = [nu; t.down] and t.up = [s.up; Phi_f(nu)]
      auto d = b.vcomp2(nu_cell, t.down);
      auto u = b.vcomp2(s.up, image_cell);
      ok = d && *d == s.down && u && *u == t.up;
    } else {
      // s.up = [t.up; nu] and t.down = [Phi_f(nu); s.down]
      auto u = b.vcomp2(t.up, nu_cell);
      auto d = b.vcomp2(image_cell, s.down);
      ok = u && *u == s.up && d && *d == t.down;
    }
    if (ok) return {true, nu};
  }
  return {false, std::nullopt};
}

namespace {

CpSquare normalize_triple(const Pi2Indexing& phi, CellId down, VertId mid, CellId up) {
  if (phi.base.vertical.is_identity(mid)) {
    const TwoCat& b = *phi.base.two_cat;
    return CpSquare::globular(require_cell(b.vcomp2(up, down), "identity-triple collapse"));
  }
  return CpSquare::triple(down, mid, up);
}

}  // namespace

CpSquare cp_vcomp(const Pi2Indexing& phi, const CpSquare& top, const CpSquare& bottom) {
  const TwoCat& b = *phi.base.two_cat;
  const FiniteCategory& bstar = phi.base.vertical;

  if (top.is_globular && bottom.is_globular)
    return CpSquare::globular(require_cell(b.vcomp2(top.cell, bottom.cell), "globular vcomp"));
  if (top.is_globular)
    return CpSquare::triple(bottom.down, bottom.mid,
                            require_cell(b.vcomp2(top.cell, bottom.up), "globular-over-triple"));
  if (bottom.is_globular)
    return CpSquare::triple(require_cell(b.vcomp2(top.down, bottom.cell), "triple-over-globular"),
                            top.mid, top.up);

  const VertId f = top.mid, g = bottom.mid;
  if (!bstar.composable(g, f))
    throw Error(Err::BoundaryMismatch, "triple frames do not compose");
  const VertId gf = bstar.raw_entry(g, f);
  // The trapped middle [top.down; bottom.up] is a pi2 element at the shared
  // object; it slides through a unit square per the indexing's direction.
  const ObjId shared = bstar.tgt(f);
  const Pi2Monoid& pi_mid = phi.monoids[shared];
  CellId mid_cell = require_cell(b.vcomp2(top.down, bottom.up), "trapped middle");
  ElemId mu = pi_mid.index_of(mid_cell);

  if (phi.direction == IndexingDirection::Opindexing) {
    CellId slid = phi.monoids[bstar.src(f)].elements[phi.hom[f][mu]];
    CellId up = require_cell(b.vcomp2(top.up, slid), "slid upper cell");
    return normalize_triple(phi, bottom.down, gf, up);
  }
  CellId slid = phi.monoids[bstar.tgt(g)].elements[phi.hom[g][mu]];
  CellId down = require_cell(b.vcomp2(slid, bottom.down), "slid lower cell");
  return normalize_triple(phi, down, gf, top.up);
}

CpSquare cp_hcomp(const Pi2Indexing& phi, const CpSquare& left, const CpSquare& right) {
  const TwoCat& b = *phi.base.two_cat;
  if (left.is_globular && right.is_globular)
    return CpSquare::globular(require_cell(b.hcomp2(left.cell, right.cell), "globular hcomp"));
  if (left.is_globular || right.is_globular)
    throw Error(Err::BoundaryMismatch, "mixed horizontal composition has incompatible frames");
  if (left.mid != right.mid)
    throw Error(Err::BoundaryMismatch, "triples over different vertical morphisms");
  return CpSquare::triple(require_cell(b.hcomp2(left.down, right.down), "paired lower cells"),
                          left.mid,
                          require_cell(b.hcomp2(left.up, right.up), "paired upper cells"));
}

CrossedProductCat::CrossedProductCat(Pi2Indexing phi) : phi_(std::move(phi)) {
  {
    ValidationReport dec = validate_decoration(phi_.base);
    if (!dec.ok()) throw Error(Err::BaseMismatch, "decoration invalid: " + dec.violations[0].law);
    ValidationReport idx = validate_indexing(phi_);
    if (!idx.ok())
      throw Error(Err::BaseMismatch, "indexing invalid: " + idx.violations[0].law);
  }
  const TwoCat& b = *phi_.base.two_cat;
  const FiniteCategory& bstar = phi_.base.vertical;
  c0_ = bstar;
  hsrc_.resize(b.one_cell_count());
  htgt_.resize(b.one_cell_count());
  for (HorId h = 0; h < b.one_cell_count(); ++h) {
    hsrc_[h] = b.src1(h);
    htgt_[h] = b.tgt1(h);
  }
  hunit_.resize(b.object_count());
  for (ObjId a = 0; a < b.object_count(); ++a) hunit_[a] = b.unit1(a);

  ncells_ = b.cell_count();
  squares_.reserve(static_cast<std::size_t>(ncells_));
  for (CellId x = 0; x < ncells_; ++x)
    squares_.push_back({bstar.identity(b.src1(b.src2(x))), bstar.identity(b.tgt1(b.src2(x))),
                        b.src2(x), b.tgt2(x)});

  // Triples, grouped by boundary for the nu-relation.
  struct Group {
    std::vector<CpSquare> members;
  };
  std::unordered_map<std::uint64_t, Group> groups;
  std::vector<std::uint64_t> group_order;
  for (VertId f = 0; f < bstar.morphism_count(); ++f) {
    if (bstar.is_identity(f)) continue;
    const HorId ua = b.unit1(bstar.src(f)), ub = b.unit1(bstar.tgt(f));
    for (CellId down : b.cells_with_src(ub))
      for (CellId up : b.cells_with_tgt(ua)) {
        SquareBoundary sb{f, f, b.src2(up), b.tgt2(down)};
        auto [it, fresh] = groups.try_emplace(sb.key());
        if (fresh) group_order.push_back(sb.key());
        it->second.members.push_back(CpSquare::triple(down, f, up));
      }
  }

  std::vector<CpSquare> reps;
  std::vector<std::vector<CpSquare>> pending_classes;
  for (std::uint64_t key : group_order) {
    Group& g = groups.at(key);
    std::sort(g.members.begin(), g.members.end(),
              [](const CpSquare& x, const CpSquare& y) { return cp_order_key(x) < cp_order_key(y); });
    const std::size_t n = g.members.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::vector<bool> edge(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (cp_equal(phi_, g.members[i], g.members[j]).equal) {
          edge[i * n + j] = true;
          parent[find(i)] = find(j);
        }
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (find(i) == find(j) && !edge[i * n + j]) nu_one_step_complete_ = false;

    std::unordered_map<std::size_t, std::vector<CpSquare>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(g.members[i]);
    for (auto& [root, members] : by_root) pending_classes.push_back(std::move(members));
  }
  std::sort(pending_classes.begin(), pending_classes.end(),
            [](const std::vector<CpSquare>& x, const std::vector<CpSquare>& y) {
              return cp_order_key(x.front()) < cp_order_key(y.front());
            });
  classes_ = std::move(pending_classes);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const CpSquare& rep = classes_[k].front();
    squares_.push_back({rep.mid, rep.mid, b.src2(rep.up), b.tgt2(rep.down)});
    for (const CpSquare& m : classes_[k])
      class_of_[triple_key(m.down, m.mid, m.up)] = ncells_ + static_cast<SqId>(k);
  }

  unit_.resize(bstar.morphism_count());
  for (VertId f = 0; f < bstar.morphism_count(); ++f) {
    if (bstar.is_identity(f))
      unit_[f] = b.identity2(b.unit1(bstar.src(f)));
    else
      unit_[f] = encode(CpSquare::triple(b.identity2(b.unit1(bstar.tgt(f))), f,
                                         b.identity2(b.unit1(bstar.src(f)))));
  }
  vid_.resize(hsrc_.size());
  for (HorId h = 0; h < static_cast<HorId>(hsrc_.size()); ++h) vid_[h] = b.identity2(h);
  build_indexes();
}

CpSquare CrossedProductCat::decode(SqId s) const {
  if (s < ncells_) return CpSquare::globular(s);
  return classes_[static_cast<std::size_t>(s - ncells_)].front();
}

SqId CrossedProductCat::encode(const CpSquare& q) const {
  if (q.is_globular) return q.cell;
  auto it = class_of_.find(triple_key(q.down, q.mid, q.up));
  if (it == class_of_.end())
    throw Error(Err::IllFormedComposite, "triple is not a square of the crossed product");
  return it->second;
}

const std::vector<CpSquare>& CrossedProductCat::class_members(SqId s) const {
  if (s < ncells_) throw Error(Err::RangeError, "globular squares have no triple class");
  return classes_[static_cast<std::size_t>(s - ncells_)];
}

SqId CrossedProductCat::compute_vcomp(SqId top, SqId bottom) const {
  return encode(cp_vcomp(phi_, decode(top), decode(bottom)));
}

SqId CrossedProductCat::compute_hcomp(SqId left, SqId right) const {
  return encode(cp_hcomp(phi_, decode(left), decode(right)));
}

CrossedProduct build_crossed_product(const Pi2Indexing& phi) {
  CrossedProduct out;
  out.dc = std::make_shared<CrossedProductCat>(phi);
  out.phi = out.dc->indexing();
  return out;
}

DoubleFunctorTable evaluation_functor(const CrossedProduct& q, std::shared_ptr<const DoubleCat> c) {
  const HorizontalizationView* view = indexing_view(q.phi);
  Pi2Indexing phi = q.phi;
  std::shared_ptr<const TwoCat> keep_alive;
  if (!view || &view->base() != c.get()) {
    phi = rebase_indexing(q.phi, c);  // throws BaseMismatch when H*C differs
    view = indexing_view(phi);
    keep_alive = phi.base.two_cat;
  }
  {
    ValidationReport ind = check_induces(*c, phi);
    if (!ind.ok())
      throw Error(Err::NotInducing, "the target double category does not induce the indexing");
  }

  const CrossedProductCat& cp = *q.dc;
  DoubleFunctorTable bang;
  bang.dom = q.dc.get();
  bang.cod = c.get();
  const FiniteCategory& c0 = c->vertical_category();
  bang.obj.resize(c0.object_count());
  for (ObjId a = 0; a < c0.object_count(); ++a) bang.obj[a] = a;
  bang.vert.resize(c0.morphism_count());
  for (VertId f = 0; f < c0.morphism_count(); ++f) bang.vert[f] = f;
  bang.hcell.resize(c->hcell_count());
  for (HorId h = 0; h < c->hcell_count(); ++h) bang.hcell[h] = h;

  for (CellId g = 0; g < cp.globular_count(); ++g) bang.square[g] = view->parent_square(g);
  for (SqId s = cp.globular_count(); s < cp.globular_count() + cp.class_count(); ++s) {
    const CpSquare rep = cp.decode(s);
    auto half = c->vcomp(view->parent_square(rep.up), c->unit_square(rep.mid));
    if (!half) throw Error(Err::IllFormedComposite, "upper pasting undefined in the target");
    auto whole = c->vcomp(*half, view->parent_square(rep.down));
    if (!whole) throw Error(Err::IllFormedComposite, "lower pasting undefined in the target");
    bang.square[s] = *whole;
  }
  return bang;
}

ValidationReport check_eval_properties(const DoubleFunctorTable& bang, const CrossedProduct& q,
                                       const DoubleCat& c, const EvalCheckOptions& opt) {
  ValidationReport rep;
  const CrossedProductCat& cp = *q.dc;
  const std::int64_t nglob = cp.globular_count();

  // (i) Strict double functor. Globular cells compose by delegation to c.
  ValidationReport laws = validate_double_functor(
      bang, opt.validate, [nglob](SqId s) { return s < nglob; });
  for (auto& v : laws.violations) rep.add("functor/" + v.law, v.witness, v.detail);
  rep.tuples_checked += laws.tuples_checked;

  // (ii) H*! = id: identity on objects, verticals, 1-cells; the globular part
  // is exactly the identification of H*(B⋊) with H*C.
  const HorizontalizationView* view = indexing_view(q.phi);
  std::unique_ptr<HorizontalizationView> local_view;
  if (!view || &view->base() != &c) {
    local_view = std::make_unique<HorizontalizationView>(
        std::shared_ptr<const DoubleCat>(&c, [](const DoubleCat*) {}));
    view = local_view.get();
  }
  for (ObjId a = 0; a < c.vertical_category().object_count(); ++a)
    if (bang.obj[a] != a) rep.add("hstar-identity-objects", {a});
  for (VertId f = 0; f < c.vertical_category().morphism_count(); ++f)
    if (bang.vert[f] != f) rep.add("hstar-identity-verticals", {f});
  for (HorId h = 0; h < c.hcell_count(); ++h)
    if (bang.hcell[h] != h) rep.add("hstar-identity-hcells", {h});
  if (view->cell_count() != nglob) {
    rep.add("hstar-cell-count", {view->cell_count(), nglob});
  } else {
    for (CellId g = 0; g < nglob; ++g) {
      ++rep.tuples_checked;
      if (bang.square.at(g) != view->parent_square(g)) rep.add("hstar-identity-cells", {g});
    }
  }

  // (iii) Fullness onto the globularly generated piece.
  GammaPiece gamma = globularly_generated_piece(c, opt.validate);
  std::unordered_set<SqId> image;
  for (auto& [s, img] : bang.square) image.insert(img);
  for (SqId s : gamma.squares) {
    ++rep.tuples_checked;
    if (!image.count(s)) {
      rep.add("full-on-gamma", {s}, "globularly generated square not in the image");
      break;
    }
  }
  if (opt.informational_fullness_on_all) {
    std::int64_t missed = 0;
    c.for_each_square([&](SqId s) {
      if (!image.count(s)) ++missed;
    });
    if (missed > 0)
      rep.add("informational/full-on-all", {missed},
              "squares outside the globularly generated piece are not hit (expected)");
  }

  // (iv) Forced images: every member of every class pastes to the same square,
  // so no other functor with identity horizontalization exists.
  for (SqId s = nglob; s < nglob + cp.class_count(); ++s) {
    SqId forced = bang.square.at(s);
    for (const CpSquare& m : cp.class_members(s)) {
      ++rep.tuples_checked;
      auto half = c.vcomp(view->parent_square(m.up), c.unit_square(m.mid));
      auto whole = half ? c.vcomp(*half, view->parent_square(m.down)) : std::nullopt;
      if (!whole || *whole != forced)
        rep.add("forced-image", {s}, "a class member pastes to a different square");
    }
  }
  return rep;
}

InjectivityDecision check_eval_injective(const DoubleFunctorTable& bang, const CrossedProduct& q,
                                         const DoubleCat& c) {
  (void)c;
  InjectivityDecision out;
  std::unordered_map<SqId, SqId> seen;
  const std::int64_t total = q.dc->globular_count() + q.dc->class_count();
  for (SqId s = 0; s < total; ++s) {
    SqId img = bang.square.at(s);
    auto [it, fresh] = seen.try_emplace(img, s);
    if (!fresh) {
      out.injective = false;
      out.first = it->second;
      out.second = s;
      out.image = img;
      return out;
    }
  }
  return out;
}

}  // namespace dcat
