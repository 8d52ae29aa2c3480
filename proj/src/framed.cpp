#include "dcat/framed.hpp"

#include <algorithm>

namespace dcat {

namespace {

// Outer squares sharing an edge with s, grouped by their frame pair.
using FrameGroups = std::unordered_map<std::uint64_t, std::vector<SqId>>;

std::uint64_t fkey(VertId a, VertId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

FrameGroups group_by_frames(const DoubleCat& c, const std::vector<SqId>& squares) {
  FrameGroups g;
  for (SqId s : squares) {
    SquareBoundary b = c.boundary(s);
    g[fkey(b.left, b.right)].push_back(s);
  }
  return g;
}

// Shared engine for both factorization directions.
//
// Cartesian (from_above): outer Phi has bottom(s) as bottom edge and frames
// (f∘h, g∘k); the factor Psi has frames (h, k), bottom edge top(s), and must
// satisfy vcomp(Psi, s) == Phi, uniquely.
// Opcartesian: outer shares the top edge, factors paste below.
CartesianDecision factorization_decision(const DoubleCat& c, SqId s, bool from_above,
                                         WitnessPolicy policy) {
  const FiniteCategory& c0 = c.vertical_category();
  SquareBoundary sb = c.boundary(s);
  CartesianDecision out;

  const HorId shared_edge = from_above ? sb.bottom : sb.top;
  FrameGroups outers =
      group_by_frames(c, from_above ? c.squares_with_bottom(shared_edge)
                                    : c.squares_with_top(shared_edge));

  for (VertId h = 0; h < c0.morphism_count(); ++h) {
    // Factor frames attach above s for cartesian, below for opcartesian.
    if (from_above ? (c0.tgt(h) != c0.src(sb.left)) : (c0.src(h) != c0.tgt(sb.left))) continue;
    const VertId lf = from_above ? c0.raw_entry(sb.left, h) : c0.raw_entry(h, sb.left);
    for (VertId k = 0; k < c0.morphism_count(); ++k) {
      if (from_above ? (c0.tgt(k) != c0.src(sb.right)) : (c0.src(k) != c0.tgt(sb.right))) continue;
      const VertId rf = from_above ? c0.raw_entry(sb.right, k) : c0.raw_entry(k, sb.right);
      auto git = outers.find(fkey(lf, rf));
      if (git == outers.end()) continue;
      // Reverse iteration: factor-less outers tend to sit late in id order,
      // which makes negative answers fail fast during niche sweeps.
      const std::vector<SqId>& group = git->second;
      for (auto it = group.rbegin(); it != group.rend(); ++it) {
        SqId outer = *it;
        SquareBoundary ob = c.boundary(outer);
        SquareBoundary want = from_above ? SquareBoundary{h, k, ob.top, sb.top}
                                         : SquareBoundary{h, k, sb.bottom, ob.bottom};
        std::vector<SqId> factors;
        for (SqId psi : c.squares_with_boundary(want)) {
          auto r = from_above ? c.vcomp(psi, s) : c.vcomp(s, psi);
          if (r && *r == outer) factors.push_back(psi);
        }
        if (factors.size() != 1) {
          out.cartesian = false;
          out.counterexample = FactorEntry{outer, h, k, std::move(factors)};
          return out;
        }
        if (policy == WitnessPolicy::All ||
            (policy == WitnessPolicy::First && out.certificate.empty()))
          out.certificate.push_back(FactorEntry{outer, h, k, factors});
      }
    }
  }
  out.cartesian = true;
  return out;
}

}  // namespace

CartesianDecision is_cartesian(const DoubleCat& c, SqId s, WitnessPolicy policy) {
  return factorization_decision(c, s, /*from_above=*/true, policy);
}

CartesianDecision is_opcartesian(const DoubleCat& c, SqId s, WitnessPolicy policy) {
  return factorization_decision(c, s, /*from_above=*/false, policy);
}

FramedReport is_framed(const DoubleCat& c) {
  FramedReport rep;
  const FiniteCategory& c0 = c.vertical_category();

  // Niches: (f, g, bottom edge). Fillers searched in ascending id order so the
  // recorded cleavage is the least one.
  for (HorId bedge = 0; bedge < c.hcell_count(); ++bedge) {
    FrameGroups fillers = group_by_frames(c, c.squares_with_bottom(bedge));
    for (auto& [key, group] : fillers) std::sort(group.begin(), group.end());
    for (VertId f = 0; f < c0.morphism_count(); ++f) {
      if (c0.tgt(f) != c.hsrc(bedge)) continue;
      for (VertId g = 0; g < c0.morphism_count(); ++g) {
        if (c0.tgt(g) != c.htgt(bedge)) continue;
        SqId chosen = kNone;
        auto git = fillers.find(fkey(f, g));
        if (git != fillers.end())
          for (SqId cand : git->second)
            if (is_cartesian(c, cand, WitnessPolicy::None).cartesian) {
              chosen = cand;
              break;
            }
        if (chosen == kNone)
          rep.violations.add("niche-unfillable", {f, g, bedge},
                             "no cartesian filler for this niche");
        else
          rep.cleavage[FramedReport::niche_key(f, g, bedge)] = chosen;
      }
    }
  }
  // Co-niches: (f, g, top edge) with opcartesian fillers.
  for (HorId tedge = 0; tedge < c.hcell_count(); ++tedge) {
    FrameGroups fillers = group_by_frames(c, c.squares_with_top(tedge));
    for (auto& [key, group] : fillers) std::sort(group.begin(), group.end());
    for (VertId f = 0; f < c0.morphism_count(); ++f) {
      if (c0.src(f) != c.hsrc(tedge)) continue;
      for (VertId g = 0; g < c0.morphism_count(); ++g) {
        if (c0.src(g) != c.htgt(tedge)) continue;
        SqId chosen = kNone;
        auto git = fillers.find(fkey(f, g));
        if (git != fillers.end())
          for (SqId cand : git->second)
            if (is_opcartesian(c, cand, WitnessPolicy::None).cartesian) {
              chosen = cand;
              break;
            }
        if (chosen == kNone)
          rep.violations.add("coniche-unfillable", {f, g, tedge},
                             "no opcartesian filler for this co-niche");
        else
          rep.op_cleavage[FramedReport::niche_key(f, g, tedge)] = chosen;
      }
    }
  }
  rep.framed = rep.violations.ok();
  if (!rep.framed) return rep;

  // Normal: the chosen filler over identity frames is the vertical identity.
  rep.normal = true;
  for (HorId h = 0; h < c.hcell_count(); ++h) {
    VertId fi = c0.identity(c.hsrc(h)), gi = c0.identity(c.htgt(h));
    if (rep.cleavage.at(FramedReport::niche_key(fi, gi, h)) != c.videntity(h)) rep.normal = false;
  }
  // Split: chosen fillers compose. cart(fh, gk, b) == vcomp(cart(h, k, top of
  // cart(f, g, b)), cart(f, g, b)).
  rep.split = true;
  for (HorId bedge = 0; bedge < c.hcell_count() && rep.split; ++bedge)
    for (VertId f = 0; f < c0.morphism_count() && rep.split; ++f) {
      if (c0.tgt(f) != c.hsrc(bedge)) continue;
      for (VertId g = 0; g < c0.morphism_count() && rep.split; ++g) {
        if (c0.tgt(g) != c.htgt(bedge)) continue;
        SqId base = rep.cleavage.at(FramedReport::niche_key(f, g, bedge));
        HorId mid = c.boundary(base).top;
        for (VertId h = 0; h < c0.morphism_count() && rep.split; ++h) {
          if (c0.tgt(h) != c0.src(f)) continue;
          for (VertId k = 0; k < c0.morphism_count(); ++k) {
            if (c0.tgt(k) != c0.src(g)) continue;
            SqId upper = rep.cleavage.at(FramedReport::niche_key(h, k, mid));
            SqId composite =
                rep.cleavage.at(FramedReport::niche_key(c0.raw_entry(f, h), c0.raw_entry(g, k), bedge));
            if (*c.vcomp(upper, base) != composite) {
              rep.split = false;
              break;
            }
          }
        }
      }
    }
  return rep;
}

bool is_fully_faithful_morphism(const DoubleCat& c, VertId f) {
  return is_cartesian(c, c.unit_square(f), WitnessPolicy::None).cartesian;
}

bool is_absolutely_dense_morphism(const DoubleCat& c, VertId f) {
  return is_opcartesian(c, c.unit_square(f), WitnessPolicy::None).cartesian;
}

namespace {

MorphismClassDecision all_morphisms(const DoubleCat& c, const FramedReport* pre, bool ff) {
  FramedReport local;
  if (!pre) {
    local = is_framed(c);
    pre = &local;
  }
  if (!pre->framed) throw Error(Err::NotFramed, "the double category is not a framed bicategory");
  MorphismClassDecision out;
  for (VertId f = 0; f < c.vertical_category().morphism_count(); ++f)
    if (!(ff ? is_fully_faithful_morphism(c, f) : is_absolutely_dense_morphism(c, f))) {
      out.witness = f;
      out.all = false;
      return out;
    }
  out.all = true;
  return out;
}

}  // namespace

MorphismClassDecision is_fully_faithful(const DoubleCat& c, const FramedReport* precomputed) {
  return all_morphisms(c, precomputed, true);
}

MorphismClassDecision is_absolutely_dense(const DoubleCat& c, const FramedReport* precomputed) {
  return all_morphisms(c, precomputed, false);
}

SubDoubleCat::SubDoubleCat(std::shared_ptr<const DoubleCat> parent,
                           const std::vector<bool>& allowed)
    : parent_(std::move(parent)) {
  const FiniteCategory& p0 = parent_->vertical_category();
  vert_from_parent_.assign(p0.morphism_count(), kNone);
  for (ObjId a = 0; a < p0.object_count(); ++a)
    if (!allowed[p0.identity(a)])
      throw Error(Err::RangeError, "vertical subset must contain all identities");
  for (VertId f = 0; f < p0.morphism_count(); ++f)
    if (allowed[f]) {
      vert_from_parent_[f] = static_cast<VertId>(vert_to_parent_.size());
      vert_to_parent_.push_back(f);
    }
  // Closure under composition (fully faithful / absolutely dense classes are
  // closed; broken input is rejected rather than silently completed).
  FiniteCategory sub;
  for (ObjId a = 0; a < p0.object_count(); ++a) sub.add_object();
  for (VertId f : vert_to_parent_) sub.add_morphism(p0.src(f), p0.tgt(f));
  sub.finalize();
  for (ObjId a = 0; a < p0.object_count(); ++a) sub.set_identity(a, vert_from_parent_[p0.identity(a)]);
  for (VertId g : vert_to_parent_)
    for (VertId f : vert_to_parent_) {
      if (!p0.composable(g, f)) continue;
      VertId r = p0.raw_entry(g, f);
      if (vert_from_parent_[r] == kNone)
        throw Error(Err::RangeError, "vertical subset is not closed under composition");
      sub.set_composite(vert_from_parent_[g], vert_from_parent_[f], vert_from_parent_[r]);
    }
  c0_ = std::move(sub);

  hsrc_.resize(parent_->hcell_count());
  htgt_.resize(parent_->hcell_count());
  hunit_.resize(p0.object_count());
  for (HorId h = 0; h < parent_->hcell_count(); ++h) {
    hsrc_[h] = parent_->hsrc(h);
    htgt_[h] = parent_->htgt(h);
  }
  for (ObjId a = 0; a < p0.object_count(); ++a) hunit_[a] = parent_->hunit(a);

  parent_->for_each_square([&](SqId s) {
    SquareBoundary b = parent_->boundary(s);
    if (!allowed[b.left] || !allowed[b.right]) return;
    SqId id = static_cast<SqId>(squares_.size());
    squares_.push_back({vert_from_parent_[b.left], vert_from_parent_[b.right], b.top, b.bottom});
    parent_sq_.push_back(s);
    sq_from_parent_[s] = id;
  });
  unit_.resize(c0_.morphism_count());
  for (VertId f = 0; f < c0_.morphism_count(); ++f)
    unit_[f] = sq_from_parent_.at(parent_->unit_square(vert_to_parent_[f]));
  vid_.resize(hsrc_.size());
  for (HorId h = 0; h < static_cast<HorId>(hsrc_.size()); ++h)
    vid_[h] = sq_from_parent_.at(parent_->videntity(h));
  build_indexes();
}

std::optional<SqId> SubDoubleCat::sub_square_of(SqId parent_square) const {
  auto it = sq_from_parent_.find(parent_square);
  if (it == sq_from_parent_.end()) return std::nullopt;
  return it->second;
}

SqId SubDoubleCat::compute_vcomp(SqId top, SqId bottom) const {
  return sq_from_parent_.at(*parent_->vcomp(parent_sq_[top], parent_sq_[bottom]));
}

SqId SubDoubleCat::compute_hcomp(SqId left, SqId right) const {
  return sq_from_parent_.at(*parent_->hcomp(parent_sq_[left], parent_sq_[right]));
}

std::shared_ptr<SubDoubleCat> restrict_star(std::shared_ptr<const DoubleCat> c) {
  const FiniteCategory& c0 = c->vertical_category();
  std::vector<bool> allowed(c0.morphism_count());
  for (VertId f = 0; f < c0.morphism_count(); ++f) allowed[f] = is_isomorphism(c0, f).is_iso;
  return std::make_shared<SubDoubleCat>(std::move(c), allowed);
}

namespace {

std::shared_ptr<SubDoubleCat> restrict_by_class(std::shared_ptr<const DoubleCat> c,
                                                const FramedReport* pre, bool ff) {
  FramedReport local;
  if (!pre) {
    local = is_framed(*c);
    pre = &local;
  }
  if (!pre->framed) throw Error(Err::NotFramed, "restriction requires a framed bicategory");
  const FiniteCategory& c0 = c->vertical_category();
  std::vector<bool> allowed(c0.morphism_count());
  for (VertId f = 0; f < c0.morphism_count(); ++f)
    allowed[f] = ff ? is_fully_faithful_morphism(*c, f) : is_absolutely_dense_morphism(*c, f);
  return std::make_shared<SubDoubleCat>(std::move(c), allowed);
}

}  // namespace

std::shared_ptr<SubDoubleCat> restrict_tilde(std::shared_ptr<const DoubleCat> c,
                                             const FramedReport* precomputed) {
  return restrict_by_class(std::move(c), precomputed, true);
}

std::shared_ptr<SubDoubleCat> restrict_hat(std::shared_ptr<const DoubleCat> c,
                                           const FramedReport* precomputed) {
  return restrict_by_class(std::move(c), precomputed, false);
}

LandsInTildeDecision framed_functor_lands_in_tilde(const DoubleFunctorTable& f) {
  LandsInTildeDecision out;
  for (VertId v = 0; v < f.dom->vertical_category().morphism_count(); ++v)
    if (!is_fully_faithful_morphism(*f.cod, f.vert[v])) {
      out.lands = false;
      out.witness = v;
      return out;
    }
  return out;
}

}  // namespace dcat
