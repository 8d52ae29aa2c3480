#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dcat/core.hpp"

namespace dcat {

struct SquareBoundary {
  VertId left = kNone;
  VertId right = kNone;
  HorId top = kNone;
  HorId bottom = kNone;

  bool operator==(const SquareBoundary&) const = default;
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(left)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(right)) << 32) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(top)) << 16) |
           static_cast<std::uint64_t>(static_cast<std::uint16_t>(bottom));
  }
};

/// A finite strict double category.
///
/// The vertical category C0 and the horizontal 1-cell data are always explicit
/// and small; the square set may be large, so backends choose how squares are
/// stored (explicit records, or computed on demand with encoded ids). Square
/// ids are opaque, deterministic, and stable for a given backend.
///
/// Reading conventions: vcomp(top, bottom) stacks top-then-bottom, so the
/// result's frames are compose(bottom_frame, top_frame) in C0; hcomp(left,
/// right) pastes left-then-right.
class DoubleCat {
 public:
  virtual ~DoubleCat() = default;

  const FiniteCategory& vertical_category() const { return c0_; }

  std::int32_t hcell_count() const { return static_cast<std::int32_t>(hsrc_.size()); }
  ObjId hsrc(HorId h) const { return hsrc_[h]; }
  ObjId htgt(HorId h) const { return htgt_[h]; }
  HorId hunit(ObjId a) const { return hunit_[a]; }

  /// Horizontal 1-cell composition, "left then right".
  virtual HorId hcompose(HorId left, HorId right) const = 0;

  /// Capacity predicate for capped fragments (span apexes grow under pullback
  /// and can leave the enumerated universe). Endpoint-matching pairs outside
  /// capacity count as non-composable everywhere: legality checks, validators
  /// and closures all respect this, so law checks quantify over the fragment.
  virtual bool hcell_composite_within(HorId, HorId) const { return true; }

  virtual std::int64_t square_count() const = 0;
  virtual SquareBoundary boundary(SqId s) const = 0;
  virtual SqId unit_square(VertId f) const = 0;
  virtual SqId videntity(HorId h) const = 0;

  /// Composition cores. Return nullopt exactly on boundary-illegal pairs;
  /// a boundary-legal pair with no entry (table backends) throws MissingEntry.
  virtual std::optional<SqId> vcomp(SqId top, SqId bottom) const = 0;
  virtual std::optional<SqId> hcomp(SqId left, SqId right) const = 0;

  virtual void for_each_square(const std::function<void(SqId)>& fn) const = 0;
  virtual std::vector<SqId> squares_with_boundary(const SquareBoundary& b) const = 0;
  virtual std::vector<SqId> squares_with_bottom(HorId h) const;
  virtual std::vector<SqId> squares_with_top(HorId h) const;

  /// True when the backend guarantees at most one square per boundary by
  /// construction (square ids are boundary encodings). Validators re-derive
  /// thinness for materialized backends instead of trusting this.
  virtual bool structurally_thin() const { return false; }

  /// True for backends whose compositions are closed-form kernels that are
  /// total on legal pairs and boundary-coherent by construction (with 1-cell
  /// composition unital and associative). Validators still sweep these laws
  /// up to a budget slice and report any violation found; the flag only
  /// changes how an unfinished sweep is classified (established rather than
  /// inconclusive). Table-loaded data never sets this.
  virtual bool composition_by_construction() const { return false; }

  bool is_globular(SqId s) const {
    SquareBoundary b = boundary(s);
    return c0_.is_identity(b.left) && c0_.is_identity(b.right);
  }
  bool vcomposable(SqId top, SqId bottom) const {
    SquareBoundary s = boundary(top), t = boundary(bottom);
    return s.bottom == t.top && c0_.composable(t.left, s.left) &&
           c0_.composable(t.right, s.right);
  }
  bool hcomposable(SqId left, SqId right) const {
    SquareBoundary s = boundary(left), t = boundary(right);
    return s.right == t.left && htgt(s.top) == hsrc(t.top) && htgt(s.bottom) == hsrc(t.bottom) &&
           hcell_composite_within(s.top, t.top) && hcell_composite_within(s.bottom, t.bottom);
  }
  SquareBoundary vcomp_boundary(SqId top, SqId bottom) const {
    SquareBoundary s = boundary(top), t = boundary(bottom);
    return {c0_.raw_entry(t.left, s.left), c0_.raw_entry(t.right, s.right), s.top, t.bottom};
  }
  SquareBoundary hcomp_boundary(SqId left, SqId right) const {
    SquareBoundary s = boundary(left), t = boundary(right);
    return {s.left, t.right, hcompose(s.top, t.top), hcompose(s.bottom, t.bottom)};
  }

 protected:
  FiniteCategory c0_;
  std::vector<ObjId> hsrc_, htgt_;
  std::vector<HorId> hunit_;
};

/// Spec-surface composition wrappers: throw BoundaryMismatch on illegal pairs.
SqId vcomp_sq(const DoubleCat& c, SqId top, SqId bottom);
SqId hcomp_sq(const DoubleCat& c, SqId left, SqId right);

/// Backend with explicit square records and sorted boundary indexes;
/// composition is delegated to a per-kind kernel.
class MaterializedDoubleCat : public DoubleCat {
 public:
  std::int64_t square_count() const override { return static_cast<std::int64_t>(squares_.size()); }
  SquareBoundary boundary(SqId s) const override { return squares_[static_cast<std::size_t>(s)]; }
  SqId unit_square(VertId f) const override { return unit_[f]; }
  SqId videntity(HorId h) const override { return vid_[h]; }

  std::optional<SqId> vcomp(SqId top, SqId bottom) const override {
    if (!vcomposable(top, bottom)) return std::nullopt;
    return compute_vcomp(top, bottom);
  }
  std::optional<SqId> hcomp(SqId left, SqId right) const override {
    if (!hcomposable(left, right)) return std::nullopt;
    return compute_hcomp(left, right);
  }

  void for_each_square(const std::function<void(SqId)>& fn) const override {
    for (SqId s = 0; s < static_cast<SqId>(squares_.size()); ++s) fn(s);
  }
  std::vector<SqId> squares_with_boundary(const SquareBoundary& b) const override;
  std::vector<SqId> squares_with_bottom(HorId h) const override;
  std::vector<SqId> squares_with_top(HorId h) const override;

  /// Dense id of an existing square with this exact boundary when the
  /// category is thin at it; kNone when absent.
  SqId find_square(const SquareBoundary& b) const;

 protected:
  // Called only on boundary-legal pairs.
  virtual SqId compute_vcomp(SqId top, SqId bottom) const = 0;
  virtual SqId compute_hcomp(SqId left, SqId right) const = 0;

  void build_indexes();

  std::vector<SquareBoundary> squares_;
  std::vector<SqId> unit_;  // per vertical morphism
  std::vector<SqId> vid_;   // per horizontal 1-cell
  std::vector<SqId> by_boundary_, by_bottom_, by_top_;
};

/// Fully tabulated backend (file-loaded documents, hand-built tests).
class TableDoubleCat : public MaterializedDoubleCat {
 public:
  TableDoubleCat() = default;

  // Construction surface used by the parser, materialize() and tests.
  void set_vertical_category(FiniteCategory c0) { c0_ = std::move(c0); }
  HorId add_hcell(ObjId src, ObjId tgt);
  void set_hunit(ObjId a, HorId h);
  void set_hcompose(HorId left, HorId right, HorId result);
  SqId add_square(SquareBoundary b);
  void set_unit_square(VertId f, SqId s);
  void set_videntity(HorId h, SqId s);
  void set_vcomp(SqId top, SqId bottom, SqId result);
  void set_hcomp(SqId left, SqId right, SqId result);
  /// Declares an endpoint-matching 1-cell pair as outside the fragment's
  /// capacity (its composite is not part of the enumerated universe).
  void set_out_of_capacity(HorId left, HorId right);
  void finalize();  // builds indexes; call once after construction

  HorId hcompose(HorId left, HorId right) const override;
  bool hcell_composite_within(HorId left, HorId right) const override {
    return !out_of_capacity_.count(pair_key(left, right));
  }
  const std::vector<std::pair<HorId, HorId>>& out_of_capacity_pairs() const {
    return out_of_capacity_rows_;
  }

  const std::unordered_map<std::uint64_t, HorId>& hcompose_table() const { return hcomp1_; }
  const std::unordered_map<std::uint64_t, SqId>& vcomp_table() const { return vtable_; }
  const std::unordered_map<std::uint64_t, SqId>& hcomp_table() const { return htable_; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  static std::uint64_t pair_key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, HorId> hcomp1_;
  std::unordered_map<std::uint64_t, SqId> vtable_, htable_;
  std::unordered_set<std::uint64_t> out_of_capacity_;
  std::vector<std::pair<HorId, HorId>> out_of_capacity_rows_;
};

struct ValidateOptions {
  // Cap on enumerated law tuples before switching to the structural path
  // (thin categories) or reporting a budget violation.
  std::uint64_t max_tuples = 800'000'000;
};

/// Checks every double-category axiom: boundary coherence, category laws for
/// C0 and horizontal 1-cells, U-functoriality, unit laws, totality of both
/// compositions on boundary-legal pairs, associativity and interchange.
///
/// For locally thin inputs whose associativity/interchange tuple spaces exceed
/// the budget, those laws follow from totality + boundary coherence (any two
/// squares with equal boundary are equal); the report's mode says so.
ValidationReport validate_double_category(const DoubleCat& c, const ValidateOptions& opt = {});

/// A Niche is a square boundary missing its top edge.
struct Niche {
  VertId left = kNone;
  VertId right = kNone;
  HorId bottom = kNone;
};

/// Strict double functor as explicit maps. Square map is keyed because domain
/// ids may be sparse.
struct DoubleFunctorTable {
  const DoubleCat* dom = nullptr;
  const DoubleCat* cod = nullptr;
  std::vector<ObjId> obj;
  std::vector<VertId> vert;
  std::vector<HorId> hcell;
  std::unordered_map<SqId, SqId> square;

  SqId map_square(SqId s) const;
};

/// Functor laws (boundary preservation, units, both compositions), enumerated
/// within budget. `delegated` marks domain squares whose composition operation
/// literally routes through the codomain's (identity embeddings); pairs of
/// delegated squares are preservation-by-construction and are skipped.
ValidationReport validate_double_functor(const DoubleFunctorTable& f, const ValidateOptions& opt = {},
                                         const std::function<bool(SqId)>& delegated = {});

/// Copies an arbitrary backend into a fully tabulated one. Throws
/// BudgetExceeded when squares or composable pairs exceed `max_tuples`.
TableDoubleCat materialize(const DoubleCat& c, const ValidateOptions& opt = {});

}  // namespace dcat
