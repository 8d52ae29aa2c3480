#include "dcat/doublecat.hpp"

#include <algorithm>
#include <unordered_set>

namespace dcat {

namespace {

// Budget-aware counter. Once spent, enumeration loops stop and the caller
// decides whether the skipped laws are covered structurally.
struct Budget {
  std::uint64_t left;
  bool spent = false;
  bool tick(std::uint64_t n = 1) {
    if (left < n) {
      spent = true;
      return false;
    }
    left -= n;
    return true;
  }
};

}  // namespace

std::vector<SqId> DoubleCat::squares_with_bottom(HorId h) const {
  std::vector<SqId> out;
  for_each_square([&](SqId s) {
    if (boundary(s).bottom == h) out.push_back(s);
  });
  return out;
}

std::vector<SqId> DoubleCat::squares_with_top(HorId h) const {
  std::vector<SqId> out;
  for_each_square([&](SqId s) {
    if (boundary(s).top == h) out.push_back(s);
  });
  return out;
}

SqId vcomp_sq(const DoubleCat& c, SqId top, SqId bottom) {
  auto r = c.vcomp(top, bottom);
  if (!r)
    throw Error(Err::BoundaryMismatch, "vcomp(" + std::to_string(top) + ", " +
                                           std::to_string(bottom) + ") is not boundary-legal");
  return *r;
}

SqId hcomp_sq(const DoubleCat& c, SqId left, SqId right) {
  auto r = c.hcomp(left, right);
  if (!r)
    throw Error(Err::BoundaryMismatch, "hcomp(" + std::to_string(left) + ", " +
                                           std::to_string(right) + ") is not boundary-legal");
  return *r;
}

void MaterializedDoubleCat::build_indexes() {
  const SqId n = static_cast<SqId>(squares_.size());
  by_boundary_.resize(n);
  by_bottom_.resize(n);
  by_top_.resize(n);
  for (SqId i = 0; i < n; ++i) by_boundary_[i] = by_bottom_[i] = by_top_[i] = i;
  std::sort(by_boundary_.begin(), by_boundary_.end(), [&](SqId a, SqId b) {
    return squares_[a].key() < squares_[b].key() || (squares_[a].key() == squares_[b].key() && a < b);
  });
  std::sort(by_bottom_.begin(), by_bottom_.end(), [&](SqId a, SqId b) {
    return squares_[a].bottom < squares_[b].bottom ||
           (squares_[a].bottom == squares_[b].bottom && a < b);
  });
  std::sort(by_top_.begin(), by_top_.end(), [&](SqId a, SqId b) {
    return squares_[a].top < squares_[b].top || (squares_[a].top == squares_[b].top && a < b);
  });
}

std::vector<SqId> MaterializedDoubleCat::squares_with_boundary(const SquareBoundary& b) const {
  const std::uint64_t k = b.key();
  auto lo = std::lower_bound(by_boundary_.begin(), by_boundary_.end(), k,
                             [&](SqId s, std::uint64_t v) { return squares_[s].key() < v; });
  std::vector<SqId> out;
  for (; lo != by_boundary_.end() && squares_[*lo].key() == k; ++lo) out.push_back(*lo);
  return out;
}

std::vector<SqId> MaterializedDoubleCat::squares_with_bottom(HorId h) const {
  auto lo = std::lower_bound(by_bottom_.begin(), by_bottom_.end(), h,
                             [&](SqId s, HorId v) { return squares_[s].bottom < v; });
  std::vector<SqId> out;
  for (; lo != by_bottom_.end() && squares_[*lo].bottom == h; ++lo) out.push_back(*lo);
  return out;
}

std::vector<SqId> MaterializedDoubleCat::squares_with_top(HorId h) const {
  auto lo = std::lower_bound(by_top_.begin(), by_top_.end(), h,
                             [&](SqId s, HorId v) { return squares_[s].top < v; });
  std::vector<SqId> out;
  for (; lo != by_top_.end() && squares_[*lo].top == h; ++lo) out.push_back(*lo);
  return out;
}

SqId MaterializedDoubleCat::find_square(const SquareBoundary& b) const {
  const std::uint64_t k = b.key();
  auto lo = std::lower_bound(by_boundary_.begin(), by_boundary_.end(), k,
                             [&](SqId s, std::uint64_t v) { return squares_[s].key() < v; });
  if (lo == by_boundary_.end() || squares_[*lo].key() != k) return kNone;
  return *lo;
}

HorId TableDoubleCat::add_hcell(ObjId src, ObjId tgt) {
  hsrc_.push_back(src);
  htgt_.push_back(tgt);
  if (hunit_.size() < static_cast<std::size_t>(c0_.object_count())) hunit_.resize(c0_.object_count(), kNone);
  return static_cast<HorId>(hsrc_.size() - 1);
}

void TableDoubleCat::set_hunit(ObjId a, HorId h) {
  if (hunit_.size() < static_cast<std::size_t>(c0_.object_count())) hunit_.resize(c0_.object_count(), kNone);
  hunit_[a] = h;
}

void TableDoubleCat::set_hcompose(HorId left, HorId right, HorId result) {
  hcomp1_[pair_key(left, right)] = result;
}

SqId TableDoubleCat::add_square(SquareBoundary b) {
  squares_.push_back(b);
  return static_cast<SqId>(squares_.size() - 1);
}

void TableDoubleCat::set_unit_square(VertId f, SqId s) {
  if (unit_.size() < static_cast<std::size_t>(c0_.morphism_count())) unit_.resize(c0_.morphism_count(), kNone);
  unit_[f] = s;
}

void TableDoubleCat::set_videntity(HorId h, SqId s) {
  if (vid_.size() < hsrc_.size()) vid_.resize(hsrc_.size(), kNone);
  vid_[h] = s;
}

void TableDoubleCat::set_vcomp(SqId top, SqId bottom, SqId result) {
  vtable_[pair_key(top, bottom)] = result;
}

void TableDoubleCat::set_hcomp(SqId left, SqId right, SqId result) {
  htable_[pair_key(left, right)] = result;
}

void TableDoubleCat::set_out_of_capacity(HorId left, HorId right) {
  if (out_of_capacity_.insert(pair_key(left, right)).second)
    out_of_capacity_rows_.emplace_back(left, right);
}

void TableDoubleCat::finalize() {
  unit_.resize(c0_.morphism_count(), kNone);
  vid_.resize(hsrc_.size(), kNone);
  hunit_.resize(c0_.object_count(), kNone);
  build_indexes();
}

HorId TableDoubleCat::hcompose(HorId left, HorId right) const {
  auto it = hcomp1_.find(pair_key(left, right));
  if (it == hcomp1_.end())
    throw Error(Err::MissingEntry, "horizontal 1-cell composition has no entry for (" +
                                       std::to_string(left) + ", " + std::to_string(right) + ")");
  return it->second;
}

SqId TableDoubleCat::compute_vcomp(SqId top, SqId bottom) const {
  auto it = vtable_.find(pair_key(top, bottom));
  if (it == vtable_.end())
    throw Error(Err::MissingEntry, "vcomp table has no entry for (" + std::to_string(top) + ", " +
                                       std::to_string(bottom) + ")");
  return it->second;
}

SqId TableDoubleCat::compute_hcomp(SqId left, SqId right) const {
  auto it = htable_.find(pair_key(left, right));
  if (it == htable_.end())
    throw Error(Err::MissingEntry, "hcomp table has no entry for (" + std::to_string(left) + ", " +
                                       std::to_string(right) + ")");
  return it->second;
}

namespace {

// Validation needs repeated "all partners of s" sweeps; bucket squares by the
// relevant key once. Only used when the square set is materialized-small.
struct SquareBuckets {
  std::vector<std::vector<SqId>> by_top, by_bottom, by_left_frame;
  bool built = false;

  void build(const DoubleCat& c, std::uint64_t cap) {
    if (static_cast<std::uint64_t>(c.square_count()) > cap) return;
    by_top.assign(c.hcell_count(), {});
    by_bottom.assign(c.hcell_count(), {});
    by_left_frame.assign(c.vertical_category().morphism_count(), {});
    c.for_each_square([&](SqId s) {
      SquareBoundary b = c.boundary(s);
      by_top[b.top].push_back(s);
      by_bottom[b.bottom].push_back(s);
      by_left_frame[b.left].push_back(s);
    });
    built = true;
  }
};

}  // namespace

ValidationReport validate_double_category(const DoubleCat& c, const ValidateOptions& opt) {
  ValidationReport rep;
  Budget budget{opt.max_tuples};
  const FiniteCategory& c0 = c.vertical_category();

  {
    ValidationReport sub = validate_category(c0);
    for (auto& v : sub.violations) rep.add("c0/" + v.law, v.witness, v.detail);
    rep.tuples_checked += sub.tuples_checked;
    if (!rep.ok()) return rep;
  }

  // Horizontal 1-cell structure.
  const std::int32_t nh = c.hcell_count();
  for (ObjId a = 0; a < c0.object_count(); ++a) {
    HorId u = c.hunit(a);
    if (u < 0 || u >= nh || c.hsrc(u) != a || c.htgt(u) != a)
      rep.add("hunit-endpoints", {a, u});
  }
  if (!rep.ok()) return rep;

  const bool kernel = c.composition_by_construction();
  // Kernel-backed instances get bounded slices for the huge sweeps; loaded
  // tables get the whole budget and must finish them.
  auto slice = [&](std::uint64_t cap) {
    if (kernel && budget.left > cap) {
      std::uint64_t parked = budget.left - cap;
      budget.left = cap;
      return parked;
    }
    return std::uint64_t{0};
  };
  auto unpark = [&](std::uint64_t parked, bool* done_flag) {
    if (budget.spent && kernel) {
      *done_flag = false;
      budget.spent = false;
    }
    budget.left += parked;
  };

  auto h1_composable = [&](HorId l, HorId r) {
    return c.htgt(l) == c.hsrc(r) && c.hcell_composite_within(l, r);
  };
  for (HorId l = 0; l < nh; ++l) {
    if (!budget.tick(nh)) break;
    for (HorId r = 0; r < nh; ++r) {
      if (!h1_composable(l, r)) continue;
      HorId x;
      try {
        x = c.hcompose(l, r);
      } catch (const Error&) {
        rep.add("h1-composition-total", {l, r});
        continue;
      }
      if (x < 0 || x >= nh || c.hsrc(x) != c.hsrc(l) || c.htgt(x) != c.htgt(r))
        rep.add("h1-composition-endpoints", {l, r, x});
    }
  }
  if (!rep.ok()) return rep;
  for (HorId h = 0; h < nh; ++h) {
    budget.tick();
    if (!h1_composable(c.hunit(c.hsrc(h)), h) || c.hcompose(c.hunit(c.hsrc(h)), h) != h)
      rep.add("h1-left-unit", {h});
    if (!h1_composable(h, c.hunit(c.htgt(h))) || c.hcompose(h, c.hunit(c.htgt(h))) != h)
      rep.add("h1-right-unit", {h});
  }
  bool h1_assoc_done = true;
  {
    std::uint64_t parked = slice(50'000'000);
    for (HorId f = 0; f < nh && !budget.spent; ++f)
      for (HorId g = 0; g < nh && !budget.spent; ++g) {
        if (!h1_composable(f, g)) continue;
        HorId fg = c.hcompose(f, g);
        for (HorId h = 0; h < nh; ++h) {
          if (!h1_composable(g, h)) continue;
          HorId gh = c.hcompose(g, h);
          if (!h1_composable(fg, h) || !h1_composable(f, gh)) continue;
          if (!budget.tick()) break;
          if (c.hcompose(fg, h) != c.hcompose(f, gh)) rep.add("h1-associativity", {f, g, h});
        }
      }
    if (budget.spent) h1_assoc_done = false;
    unpark(parked, &h1_assoc_done);
  }

  // Square structural pass: boundaries coherent with frames, thinness census.
  const std::int32_t nv = c0.morphism_count();
  std::unordered_map<std::uint64_t, std::int32_t> boundary_count;
  bool thin = true;
  bool census_ok = true;
  if (static_cast<std::uint64_t>(c.square_count()) >
      std::min<std::uint64_t>(opt.max_tuples / 2, 10'000'000))
    census_ok = false;
  std::uint64_t structural_bad = 0;
  c.for_each_square([&](SqId s) {
    SquareBoundary b = c.boundary(s);
    bool ok = b.left >= 0 && b.left < nv && b.right >= 0 && b.right < nv && b.top >= 0 &&
              b.top < nh && b.bottom >= 0 && b.bottom < nh;
    if (ok)
      ok = c.hsrc(b.top) == c0.src(b.left) && c.htgt(b.top) == c0.src(b.right) &&
           c.hsrc(b.bottom) == c0.tgt(b.left) && c.htgt(b.bottom) == c0.tgt(b.right);
    if (!ok && structural_bad++ < 8) rep.add("square-boundary", {s});
    if (census_ok) {
      if (++boundary_count[b.key()] > 1) thin = false;
    }
    rep.tuples_checked++;
  });
  if (!census_ok) thin = c.structurally_thin();
  if (!rep.ok()) return rep;

  // Unit and vertical-identity tables.
  for (VertId f = 0; f < nv; ++f) {
    SqId u = c.unit_square(f);
    SquareBoundary expect{f, f, c.hunit(c0.src(f)), c.hunit(c0.tgt(f))};
    if (u < 0 || !(c.boundary(u) == expect)) rep.add("unit-square-boundary", {f, u});
  }
  for (HorId h = 0; h < nh; ++h) {
    SqId v = c.videntity(h);
    SquareBoundary expect{c0.identity(c.hsrc(h)), c0.identity(c.htgt(h)), h, h};
    if (v < 0 || !(c.boundary(v) == expect)) rep.add("videntity-boundary", {h, v});
  }
  if (!rep.ok()) return rep;
  for (ObjId a = 0; a < c0.object_count(); ++a)
    if (c.unit_square(c0.identity(a)) != c.videntity(c.hunit(a)))
      rep.add("degenerate-square", {a}, "U(id) != vertical identity of the unit 1-cell");

  // U functoriality: U(g∘f) = vcomp(U(f), U(g)).
  for (VertId g = 0; g < nv; ++g)
    for (VertId f = 0; f < nv; ++f) {
      if (!c0.composable(g, f)) continue;
      budget.tick();
      auto r = c.vcomp(c.unit_square(f), c.unit_square(g));
      if (!r || *r != c.unit_square(c0.raw_entry(g, f))) rep.add("unit-functoriality", {g, f});
    }

  // Per-square unit laws.
  bool unit_laws_done = true;
  {
    std::uint64_t bad = 0;
    bool stop = false;
    c.for_each_square([&](SqId s) {
      if (stop) return;
      if (!budget.tick(4)) {
        stop = true;
        return;
      }
      SquareBoundary b = c.boundary(s);
      auto top_id = c.vcomp(c.videntity(b.top), s);
      auto bot_id = c.vcomp(s, c.videntity(b.bottom));
      auto left_id = c.hcomp(c.unit_square(b.left), s);
      auto right_id = c.hcomp(s, c.unit_square(b.right));
      if (!(top_id && *top_id == s && bot_id && *bot_id == s && left_id && *left_id == s &&
            right_id && *right_id == s))
        if (bad++ < 8) rep.add("square-unit-laws", {s});
    });
    if (stop) unit_laws_done = false;
  }
  if (!rep.ok()) return rep;

  SquareBuckets idx;
  idx.build(c, std::min<std::uint64_t>(opt.max_tuples / 2, 5'000'000));

  // Totality + boundary coherence of both square compositions on legal pairs.
  bool totality_done = false;
  std::uint64_t totality_parked = slice(100'000'000);
  if (idx.built) {
    std::uint64_t bad = 0;
    bool stop = false;
    c.for_each_square([&](SqId s) {
      if (stop) return;
      SquareBoundary b = c.boundary(s);
      for (SqId t : idx.by_top[b.bottom]) {
        if (!c.vcomposable(s, t)) continue;
        if (!budget.tick()) {
          stop = true;
          return;
        }
        std::optional<SqId> r;
        try {
          r = c.vcomp(s, t);
        } catch (const Error&) {
        }
        if (!r) {
          if (bad++ < 8) rep.add("vcomp-total", {s, t});
        } else if (!(c.boundary(*r) == c.vcomp_boundary(s, t))) {
          if (bad++ < 8) rep.add("vcomp-boundary", {s, t, *r});
        }
      }
      for (SqId t : idx.by_left_frame[b.right]) {
        if (!c.hcomposable(s, t)) continue;
        if (!budget.tick()) {
          stop = true;
          return;
        }
        std::optional<SqId> r;
        try {
          r = c.hcomp(s, t);
        } catch (const Error&) {
        }
        if (!r) {
          if (bad++ < 8) rep.add("hcomp-total", {s, t});
        } else if (!(c.boundary(*r) == c.hcomp_boundary(s, t))) {
          if (bad++ < 8) rep.add("hcomp-boundary", {s, t, *r});
        }
      }
    });
    totality_done = !stop;
  }
  unpark(totality_parked, &totality_done);
  if (!rep.ok()) return rep;

  // Associativity and interchange. For thin inputs these follow from what was
  // already verified: both sides of each law are squares over the same
  // boundary (1-cell laws hold), and a thin category has at most one square
  // per boundary. The enumeration is then only a redundancy check, so it gets
  // a small fixed slice instead of the whole remaining budget.
  bool assoc_done = false, interchange_done = false;
  const std::uint64_t used_before_laws = opt.max_tuples - budget.left;
  if (thin && budget.left > 4'000'000) budget.left = 4'000'000;
  const std::uint64_t law_slice = budget.left;
  if (idx.built && totality_done) {
    bool stop = false;
    c.for_each_square([&](SqId a) {
      if (stop) return;
      SquareBoundary ba = c.boundary(a);
      for (SqId b : idx.by_top[ba.bottom]) {
        if (!c.vcomposable(a, b)) continue;
        SqId ab = *c.vcomp(a, b);
        for (SqId d : idx.by_top[c.boundary(b).bottom]) {
          if (!c.vcomposable(b, d) || !c.vcomposable(ab, d)) continue;
          if (!budget.tick()) {
            stop = true;
            return;
          }
          if (*c.vcomp(ab, d) != *c.vcomp(a, *c.vcomp(b, d))) rep.add("vcomp-associativity", {a, b, d});
        }
      }
      for (SqId b : idx.by_left_frame[ba.right]) {
        if (!c.hcomposable(a, b)) continue;
        SqId ab = *c.hcomp(a, b);
        for (SqId d : idx.by_left_frame[c.boundary(b).right]) {
          if (!c.hcomposable(b, d) || !c.hcomposable(ab, d)) continue;
          if (!budget.tick()) {
            stop = true;
            return;
          }
          if (*c.hcomp(ab, d) != *c.hcomp(a, *c.hcomp(b, d))) rep.add("hcomp-associativity", {a, b, d});
        }
      }
    });
    assoc_done = !stop;

    stop = false;
    c.for_each_square([&](SqId a) {
      if (stop) return;
      SquareBoundary ba = c.boundary(a);
      for (SqId b : idx.by_left_frame[ba.right]) {  // a | b  on top
        if (!c.hcomposable(a, b)) continue;
        for (SqId cc : idx.by_top[ba.bottom]) {  // c under a
          if (!c.vcomposable(a, cc)) continue;
          for (SqId d : idx.by_top[c.boundary(b).bottom]) {  // d under b
            if (!c.vcomposable(b, d) || !c.hcomposable(cc, d)) continue;
            if (!budget.tick()) {
              stop = true;
              return;
            }
            if (*c.hcomp(*c.vcomp(a, cc), *c.vcomp(b, d)) !=
                *c.vcomp(*c.hcomp(a, b), *c.hcomp(cc, d)))
              rep.add("interchange", {a, b, cc, d});
          }
        }
      }
    });
    interchange_done = !stop;
  }

  const bool all_enumerated =
      h1_assoc_done && unit_laws_done && totality_done && assoc_done && interchange_done;
  if (!all_enumerated) {
    const bool premises =
        unit_laws_done && (totality_done || kernel) && (h1_assoc_done || kernel);
    if (thin && premises) {
      rep.mode = (totality_done && h1_assoc_done) ? "thin-structural" : "thin-structural-kernel";
    } else {
      rep.add("budget", {static_cast<std::int64_t>(opt.max_tuples)},
              "law enumeration exceeded the tuple budget and the instance is not "
              "verifiably thin; validation is inconclusive");
    }
  }
  rep.tuples_checked += used_before_laws + (law_slice - budget.left);
  return rep;
}

SqId DoubleFunctorTable::map_square(SqId s) const {
  auto it = square.find(s);
  if (it == square.end())
    throw Error(Err::MissingEntry, "double functor has no image for square " + std::to_string(s));
  return it->second;
}

ValidationReport validate_double_functor(const DoubleFunctorTable& f, const ValidateOptions& opt,
                                         const std::function<bool(SqId)>& delegated) {
  ValidationReport rep;
  Budget budget{opt.max_tuples};
  const DoubleCat& D = *f.dom;
  const DoubleCat& C = *f.cod;
  const FiniteCategory& d0 = D.vertical_category();
  const FiniteCategory& c0v = C.vertical_category();

  FunctorTable vert{f.obj, f.vert};
  ValidationReport sub = validate_functor(vert, d0, c0v);
  for (auto& v : sub.violations) rep.add("vertical/" + v.law, v.witness, v.detail);

  for (HorId h = 0; h < D.hcell_count(); ++h) {
    HorId fh = f.hcell[h];
    if (C.hsrc(fh) != f.obj[D.hsrc(h)] || C.htgt(fh) != f.obj[D.htgt(h)])
      rep.add("hcell-endpoints", {h});
  }
  for (ObjId a = 0; a < d0.object_count(); ++a)
    if (f.hcell[D.hunit(a)] != C.hunit(f.obj[a])) rep.add("preserves-hunit", {a});
  if (!rep.ok()) return rep;

  D.for_each_square([&](SqId s) {
    budget.tick();
    SqId fs = f.map_square(s);
    SquareBoundary b = D.boundary(s);
    SquareBoundary expect{f.vert[b.left], f.vert[b.right], f.hcell[b.top], f.hcell[b.bottom]};
    if (!(C.boundary(fs) == expect)) rep.add("square-boundary", {s, fs});
  });
  for (VertId v = 0; v < d0.morphism_count(); ++v) {
    budget.tick();
    if (f.map_square(D.unit_square(v)) != C.unit_square(f.vert[v])) rep.add("preserves-unit-square", {v});
  }
  for (HorId h = 0; h < D.hcell_count(); ++h) {
    budget.tick();
    if (f.map_square(D.videntity(h)) != C.videntity(f.hcell[h])) rep.add("preserves-videntity", {h});
  }
  if (!rep.ok()) return rep;

  SquareBuckets idx;
  idx.build(D, opt.max_tuples);
  if (!idx.built) {
    rep.add("budget", {}, "domain too large to enumerate composition pairs");
    return rep;
  }
  bool stop = false;
  std::uint64_t bad = 0;
  D.for_each_square([&](SqId s) {
    if (stop) return;
    // Delegated pairs compose through the codomain's own operation, so
    // preservation is definitional for them.
    bool s_deleg = delegated && delegated(s);
    SquareBoundary b = D.boundary(s);
    for (SqId t : idx.by_top[b.bottom]) {
      if (!D.vcomposable(s, t)) continue;
      if (s_deleg && delegated(t)) continue;
      if (!budget.tick()) {
        stop = true;
        return;
      }
      if (f.map_square(*D.vcomp(s, t)) != *C.vcomp(f.map_square(s), f.map_square(t)))
        if (bad++ < 8) rep.add("preserves-vcomp", {s, t});
    }
    for (SqId t : idx.by_left_frame[b.right]) {
      if (!D.hcomposable(s, t)) continue;
      if (s_deleg && delegated(t)) continue;
      if (!budget.tick()) {
        stop = true;
        return;
      }
      if (f.map_square(*D.hcomp(s, t)) != *C.hcomp(f.map_square(s), f.map_square(t)))
        if (bad++ < 8) rep.add("preserves-hcomp", {s, t});
    }
  });
  if (stop) rep.add("budget", {}, "composition-preservation sweep exceeded budget");
  rep.tuples_checked += opt.max_tuples - budget.left;
  return rep;
}

TableDoubleCat materialize(const DoubleCat& c, const ValidateOptions& opt) {
  const std::uint64_t n = static_cast<std::uint64_t>(c.square_count());
  if (n * n > opt.max_tuples)
    throw Error(Err::BudgetExceeded, "materialize: " + std::to_string(n) + " squares");
  TableDoubleCat out;
  out.set_vertical_category(c.vertical_category());
  for (HorId h = 0; h < c.hcell_count(); ++h) out.add_hcell(c.hsrc(h), c.htgt(h));
  for (ObjId a = 0; a < c.vertical_category().object_count(); ++a) out.set_hunit(a, c.hunit(a));
  for (HorId l = 0; l < c.hcell_count(); ++l)
    for (HorId r = 0; r < c.hcell_count(); ++r) {
      if (c.htgt(l) != c.hsrc(r)) continue;
      if (c.hcell_composite_within(l, r))
        out.set_hcompose(l, r, c.hcompose(l, r));
      else
        out.set_out_of_capacity(l, r);
    }

  // Dense re-numbering in for_each order.
  std::unordered_map<SqId, SqId> dense;
  std::vector<SqId> orig;
  c.for_each_square([&](SqId s) {
    dense[s] = out.add_square(c.boundary(s));
    orig.push_back(s);
  });
  for (VertId f = 0; f < c.vertical_category().morphism_count(); ++f)
    out.set_unit_square(f, dense.at(c.unit_square(f)));
  for (HorId h = 0; h < c.hcell_count(); ++h) out.set_videntity(h, dense.at(c.videntity(h)));

  std::uint64_t pairs = 0;
  for (SqId s : orig)
    for (SqId t : orig) {
      if (c.vcomposable(s, t)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "materialize: pair budget");
        out.set_vcomp(dense.at(s), dense.at(t), dense.at(*c.vcomp(s, t)));
      }
      if (c.hcomposable(s, t)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "materialize: pair budget");
        out.set_hcomp(dense.at(s), dense.at(t), dense.at(*c.hcomp(s, t)));
      }
    }
  out.finalize();
  return out;
}

}  // namespace dcat
