#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dcat/doublecat.hpp"

namespace dcat {

enum class WitnessPolicy { None, First, All };

/// One factorization instance: the outer square, the frame factors (h, k) it
/// was tested against, and every factor found (exactly one when cartesian).
struct FactorEntry {
  SqId outer = kNone;
  VertId h = kNone;
  VertId k = kNone;
  std::vector<SqId> factors;
};

struct CartesianDecision {
  bool cartesian = false;
  std::optional<FactorEntry> counterexample;  // 0 or >= 2 factors
  std::vector<FactorEntry> certificate;       // per WitnessPolicy
};

/// True iff every square with the same bottom edge and frames factoring
/// through this square's frames factors through it uniquely from above.
CartesianDecision is_cartesian(const DoubleCat& c, SqId s, WitnessPolicy policy = WitnessPolicy::First);

/// Dual: factorizations from below, against squares sharing the top edge.
CartesianDecision is_opcartesian(const DoubleCat& c, SqId s, WitnessPolicy policy = WitnessPolicy::First);

struct FramedReport {
  ValidationReport violations;  // unfillable niches / co-niches, with witnesses
  bool framed = false;
  bool normal = false;
  bool split = false;
  // niche (f, g, bottom) -> least-id cartesian filler; dually for co-niches.
  std::unordered_map<std::uint64_t, SqId> cleavage;
  std::unordered_map<std::uint64_t, SqId> op_cleavage;

  static std::uint64_t niche_key(VertId f, VertId g, HorId h) {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(f)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(g)) << 32) |
           static_cast<std::uint32_t>(h);
  }
};

/// Every niche has a cartesian filler and every co-niche an opcartesian one;
/// records the least-id cleavage and whether it is normal and split.
FramedReport is_framed(const DoubleCat& c);

bool is_fully_faithful_morphism(const DoubleCat& c, VertId f);
bool is_absolutely_dense_morphism(const DoubleCat& c, VertId f);

struct MorphismClassDecision {
  bool all = false;
  std::optional<VertId> witness;  // first failing vertical morphism
};

/// Conjunction over all vertical morphisms. Throws NotFramed unless a framed
/// report is supplied or the bifibration check passes.
MorphismClassDecision is_fully_faithful(const DoubleCat& c, const FramedReport* precomputed = nullptr);
MorphismClassDecision is_absolutely_dense(const DoubleCat& c, const FramedReport* precomputed = nullptr);

/// Sub-double category on a frame predicate: same objects and horizontal
/// 1-cells, vertical morphisms restricted to a composition-closed subset
/// containing all identities, squares restricted to allowed frames.
class SubDoubleCat : public MaterializedDoubleCat {
 public:
  SubDoubleCat(std::shared_ptr<const DoubleCat> parent, const std::vector<bool>& allowed_verticals);

  const DoubleCat& parent() const { return *parent_; }
  SqId parent_square(SqId s) const { return parent_sq_[static_cast<std::size_t>(s)]; }
  VertId parent_vertical(VertId f) const { return vert_to_parent_[f]; }
  std::optional<SqId> sub_square_of(SqId parent_square) const;

  HorId hcompose(HorId left, HorId right) const override { return parent_->hcompose(left, right); }
  bool hcell_composite_within(HorId l, HorId r) const override {
    return parent_->hcell_composite_within(l, r);
  }
  bool composition_by_construction() const override {
    return parent_->composition_by_construction();
  }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  std::shared_ptr<const DoubleCat> parent_;
  std::vector<VertId> vert_to_parent_;
  std::vector<VertId> vert_from_parent_;
  std::vector<SqId> parent_sq_;
  std::unordered_map<SqId, SqId> sq_from_parent_;
};

/// C*: squares whose frames are vertical isomorphisms.
std::shared_ptr<SubDoubleCat> restrict_star(std::shared_ptr<const DoubleCat> c);

/// C~ (fully faithful frames) and C^ (absolutely dense frames). Both require
/// the parent to be framed.
std::shared_ptr<SubDoubleCat> restrict_tilde(std::shared_ptr<const DoubleCat> c,
                                             const FramedReport* precomputed = nullptr);
std::shared_ptr<SubDoubleCat> restrict_hat(std::shared_ptr<const DoubleCat> c,
                                           const FramedReport* precomputed = nullptr);

struct LandsInTildeDecision {
  bool lands = true;
  std::optional<VertId> witness;  // vertical of the domain whose image breaks it
};

/// Image containment for a strict framed functor into a framed C: every
/// U(F(f)) must be cartesian in C.
LandsInTildeDecision framed_functor_lands_in_tilde(const DoubleFunctorTable& f);

}  // namespace dcat
