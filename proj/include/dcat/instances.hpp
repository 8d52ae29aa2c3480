#pragma once

#include <array>
#include <memory>
#include <string>

#include "dcat/doublecat.hpp"
#include "dcat/framed.hpp"

namespace dcat {

/// Relations on the sets {1}, {1..2}, ..., {1..n}: vertical morphisms are
/// functions, horizontal 1-cells are relations (bitmasks), and a square over
/// (f, g, R, S) exists iff (f x, g y) ∈ S for every (x, y) ∈ R. Squares are
/// never materialized; square ids encode their boundary (the structure is
/// locally thin), so Rel(3) with its 38.9M squares stays usable.
class RelCat : public DoubleCat {
 public:
  explicit RelCat(int max_size);

  int max_size() const { return n_; }
  HorId hcompose(HorId left, HorId right) const override;
  std::int64_t square_count() const override;
  SquareBoundary boundary(SqId s) const override;
  SqId unit_square(VertId f) const override;
  SqId videntity(HorId h) const override;
  std::optional<SqId> vcomp(SqId top, SqId bottom) const override;
  std::optional<SqId> hcomp(SqId left, SqId right) const override;
  void for_each_square(const std::function<void(SqId)>& fn) const override;
  std::vector<SqId> squares_with_boundary(const SquareBoundary& b) const override;
  std::vector<SqId> squares_with_bottom(HorId h) const override;
  std::vector<SqId> squares_with_top(HorId h) const override;
  bool structurally_thin() const override { return true; }
  bool composition_by_construction() const override { return true; }

  // Oracle-facing helpers (tests compare against independent enumerations).
  int object_size(ObjId a) const { return a + 1; }
  int fn_apply(VertId f, int x) const { return fn_digits_[f][x]; }
  std::uint32_t rel_bits(HorId h) const { return rel_bits_[h]; }
  HorId rel_id(ObjId a, ObjId b, std::uint32_t bits) const;
  bool square_exists(const SquareBoundary& b) const;

 private:
  SqId encode(const SquareBoundary& b) const;
  std::uint32_t image_bits(VertId f, VertId g, std::uint32_t rbits, int bsz, int dsz) const;

  int n_;
  std::vector<std::array<std::int8_t, 3>> fn_digits_;  // per vertical morphism
  std::vector<std::uint32_t> rel_bits_;                // per horizontal 1-cell
  std::vector<std::vector<HorId>> rel_offset_;         // (a, b) -> first hcell id
};

/// Spans over the sets {1..k}, k <= max_object, with apexes of size up to
/// max_apex; squares are apex maps commuting with the legs (strict equality,
/// no iso classes). Pullback composition neither stays under an apex cap nor
/// strictifies, so horizontal composition is kept at string length one:
/// endpoint-matching 1-cell pairs are in capacity only when one side is a
/// unit span. The vertical structure is complete.
class SpanCat : public MaterializedDoubleCat {
 public:
  SpanCat(int max_object, int max_apex, bool invertible_frames_only);

  HorId hcompose(HorId left, HorId right) const override;
  bool hcell_composite_within(HorId l, HorId r) const override;
  bool composition_by_construction() const override { return true; }

  int apex_size(HorId h) const { return static_cast<int>(legs_[h].first.size()); }
  const std::vector<std::int8_t>& left_leg(HorId h) const { return legs_[h].first; }
  const std::vector<std::int8_t>& right_leg(HorId h) const { return legs_[h].second; }
  const std::vector<std::int8_t>& apex_map(SqId s) const { return maps_[static_cast<std::size_t>(s)]; }
  int fn_apply(VertId f, int x) const { return fn_digits_[f][x]; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  SqId square_id(const SquareBoundary& b, const std::vector<std::int8_t>& m) const;

  int nobj_, napex_;
  std::vector<std::vector<std::int8_t>> fn_digits_;
  std::vector<std::pair<std::vector<std::int8_t>, std::vector<std::int8_t>>> legs_;
  std::unordered_map<std::string, HorId> span_index_;
  std::vector<std::vector<std::int8_t>> maps_;
  std::unordered_map<std::string, SqId> square_index_;
};

/// Commuting squares on a category: horizontal and vertical 1-cells are the
/// category's morphisms; a square (f, g, top, bottom) exists iff
/// bottom ∘ f = g ∘ top. Locally thin.
class CommutingSquaresCat : public MaterializedDoubleCat {
 public:
  explicit CommutingSquaresCat(FiniteCategory cat);
  HorId hcompose(HorId left, HorId right) const override;
  bool composition_by_construction() const override { return true; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;
};

/// One object, one vertical morphism, one horizontal 1-cell; squares are the
/// elements of a commutative monoid, both compositions are its operation.
/// Realizes a prescribed pi2.
class MonoidBundleCat : public MaterializedDoubleCat {
 public:
  explicit MonoidBundleCat(CommMonoid m);
  HorId hcompose(HorId, HorId) const override { return 0; }
  bool composition_by_construction() const override { return true; }
  const CommMonoid& monoid() const { return m_; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  CommMonoid m_;
};

/// One object, vertical group Z/k, unit horizontal 1-cell; squares are
/// (left, right, a) with a in a commutative monoid A, composing componentwise.
/// With A a group this is a fully faithful and absolutely dense double
/// groupoid whose pi2 is A.
///
/// The twisted variant keeps only equal-frame squares (v, v, a) and lets odd
/// verticals act on A by inversion when stacking, so the induced sliding maps
/// are nontrivial automorphisms. Requires A a group and an even order.
class GroupDoubleGroupoidCat : public MaterializedDoubleCat {
 public:
  GroupDoubleGroupoidCat(int vertical_order, CommMonoid a, bool twisted = false);
  HorId hcompose(HorId, HorId) const override { return 0; }
  bool composition_by_construction() const override { return true; }
  const CommMonoid& coefficient_monoid() const { return a_; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  SqId id_of(int v1, int v2, ElemId a) const {
    if (twisted_) return static_cast<SqId>(v1) * a_.size + a;
    return (static_cast<SqId>(v1) * k_ + v2) * a_.size + a;
  }
  ElemId act(int v, ElemId a) const { return (twisted_ && v % 2 != 0) ? inverse_[a] : a; }
  int k_;
  CommMonoid a_;
  bool twisted_ = false;
  std::vector<ElemId> inverse_;
};

// Named commutative monoids used by instance specs and tests.
CommMonoid make_trivial_monoid();
CommMonoid make_cyclic_group(int k);
CommMonoid make_or_monoid();                 // {0, 1}, idempotent join
CommMonoid make_absorbing_monoid();          // {e, x, z}: x·x = z, z absorbing

struct SpanParams {
  int max_object = 2;
  int max_apex = 2;
};

std::shared_ptr<RelCat> build_rel(int n);
std::shared_ptr<SpanCat> build_span(const SpanParams& p, bool invertible_frames_only = false);
std::shared_ptr<CommutingSquaresCat> build_commuting_squares(FiniteCategory cat);
std::shared_ptr<MonoidBundleCat> build_monoid_bundle(CommMonoid m);
std::shared_ptr<GroupDoubleGroupoidCat> build_group_double_groupoid(int vertical_order, CommMonoid a,
                                                                    bool twisted = false);

/// Free category on the path 0 -> 1 -> 2 (identities, e1, e2, e2∘e1).
FiniteCategory make_path2_category();
/// A finite group as a one-object category; order k, cyclic.
FiniteCategory make_cyclic_group_category(int k);
FiniteCategory make_discrete_category(int objects);

struct NatEndoResult {
  CommMonoid monoid;
  std::vector<std::vector<MorId>> families;  // element -> per-object component
};

/// The commutative monoid of natural endomorphisms of the identity functor.
NatEndoResult nat_endomorphisms_monoid(const FiniteCategory& cat,
                                       std::uint64_t budget = 1'000'000);

struct InstanceSpec {
  enum class Kind { Rel, Span, CommutingSquares, MonoidBundle, GroupDoubleGroupoid } kind;
  enum class Restriction { None, Star, Tilde, Hat } restriction = Restriction::None;
  int n = 2;          // rel size / span max object / group order
  int apex = 2;       // span only
  std::string monoid = "z2";  // bundle coefficient / groupoid coefficient
  std::string category = "path2";  // commuting-squares base
  bool twisted = false;       // group double groupoid monodromy
};

InstanceSpec parse_instance_spec(const std::string& kind, const std::string& restriction, int n,
                                 int apex, const std::string& monoid, const std::string& category,
                                 bool twisted = false);

std::shared_ptr<const DoubleCat> build_instance(const InstanceSpec& spec);

struct NonInjectivityWitness {
  bool found = false;
  // Two distinct crossed-product square classes with the same image, as
  // (down-cell square, vertical, up-cell square) triples of the base category,
  // plus the shared image square.
  SqId first_down = kNone, first_up = kNone;
  SqId second_down = kNone, second_up = kNone;
  VertId vertical = kNone;
  SqId image = kNone;
};

/// Searches the evaluation functor of C's crossed product for two distinct
/// square classes with equal image (Thm 5.2 setting). Requires every vertical
/// morphism of C to be fully faithful (unit squares cartesian); verifies that
/// before searching.
NonInjectivityWitness find_noninjectivity_witness(std::shared_ptr<const DoubleCat> c);

}  // namespace dcat
