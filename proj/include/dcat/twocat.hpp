#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dcat/core.hpp"
#include "dcat/doublecat.hpp"

namespace dcat {

using CellId = std::int64_t;  // 2-cells of a 2-category

/// A finite strict 2-category. 2-cells x: α ⇒ β go from a source 1-cell (the
/// top edge, in square pictures) to a parallel target 1-cell. vcomp2(x, y) is
/// "x then y" (defined when tgt2(x) == src2(y)); hcomp2(x, y) pastes side by
/// side (defined when the underlying objects line up).
class TwoCat {
 public:
  virtual ~TwoCat() = default;

  std::int32_t object_count() const { return objects_; }
  std::int32_t one_cell_count() const { return static_cast<std::int32_t>(src1_.size()); }
  ObjId src1(HorId h) const { return src1_[h]; }
  ObjId tgt1(HorId h) const { return tgt1_[h]; }
  HorId unit1(ObjId a) const { return unit1_[a]; }
  virtual HorId compose1(HorId left, HorId right) const = 0;
  /// Capacity predicate mirroring DoubleCat::hcell_composite_within.
  virtual bool compose1_within(HorId, HorId) const { return true; }

  virtual std::int64_t cell_count() const = 0;
  virtual HorId src2(CellId x) const = 0;
  virtual HorId tgt2(CellId x) const = 0;
  virtual CellId identity2(HorId h) const = 0;
  virtual std::optional<CellId> vcomp2(CellId top, CellId bottom) const = 0;
  virtual std::optional<CellId> hcomp2(CellId left, CellId right) const = 0;

  virtual const std::vector<CellId>& cells_with_src(HorId h) const = 0;
  virtual const std::vector<CellId>& cells_with_tgt(HorId h) const = 0;

  bool vcomposable2(CellId x, CellId y) const { return tgt2(x) == src2(y); }
  bool hcomposable2(CellId x, CellId y) const {
    return tgt1(src2(x)) == src1(src2(y)) && compose1_within(src2(x), src2(y)) &&
           compose1_within(tgt2(x), tgt2(y));
  }

 protected:
  std::int32_t objects_ = 0;
  std::vector<ObjId> src1_, tgt1_;
  std::vector<HorId> unit1_;
};

/// Fully tabulated strict 2-category (file documents, hand-built tests).
class FiniteTwoCategory : public TwoCat {
 public:
  void set_object_count(std::int32_t n);
  HorId add_one_cell(ObjId src, ObjId tgt);
  void set_unit1(ObjId a, HorId h) { unit1_[a] = h; }
  void set_compose1(HorId left, HorId right, HorId result);
  CellId add_cell(HorId src, HorId tgt);
  void set_identity2(HorId h, CellId x) {
    if (id2_.size() < src1_.size()) id2_.resize(src1_.size(), kNone);
    id2_[h] = x;
  }
  void set_vcomp2(CellId a, CellId b, CellId r);
  void set_hcomp2(CellId a, CellId b, CellId r);
  void finalize();

  HorId compose1(HorId left, HorId right) const override;
  std::int64_t cell_count() const override { return static_cast<std::int64_t>(csrc_.size()); }
  HorId src2(CellId x) const override { return csrc_[x]; }
  HorId tgt2(CellId x) const override { return ctgt_[x]; }
  CellId identity2(HorId h) const override { return id2_[h]; }
  std::optional<CellId> vcomp2(CellId top, CellId bottom) const override;
  std::optional<CellId> hcomp2(CellId left, CellId right) const override;
  const std::vector<CellId>& cells_with_src(HorId h) const override { return by_src_[h]; }
  const std::vector<CellId>& cells_with_tgt(HorId h) const override { return by_tgt_[h]; }

 private:
  static std::uint64_t key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  std::vector<HorId> csrc_, ctgt_;
  std::vector<CellId> id2_;
  std::unordered_map<std::uint64_t, HorId> comp1_;
  std::unordered_map<std::uint64_t, CellId> v2_, h2_;
  std::vector<std::vector<CellId>> by_src_, by_tgt_;
};

/// The horizontal 2-category of a double category: 2-cells are its globular
/// squares, compositions delegate to the backing square operations.
class HorizontalizationView : public TwoCat {
 public:
  explicit HorizontalizationView(std::shared_ptr<const DoubleCat> base);

  const DoubleCat& base() const { return *base_; }
  std::shared_ptr<const DoubleCat> base_ptr() const { return base_; }
  SqId parent_square(CellId x) const { return parent_[x]; }
  std::optional<CellId> cell_of_square(SqId s) const;

  HorId compose1(HorId left, HorId right) const override { return base_->hcompose(left, right); }
  bool compose1_within(HorId l, HorId r) const override {
    return base_->hcell_composite_within(l, r);
  }
  std::int64_t cell_count() const override { return static_cast<std::int64_t>(parent_.size()); }
  HorId src2(CellId x) const override { return base_->boundary(parent_[x]).top; }
  HorId tgt2(CellId x) const override { return base_->boundary(parent_[x]).bottom; }
  CellId identity2(HorId h) const override;
  std::optional<CellId> vcomp2(CellId top, CellId bottom) const override;
  std::optional<CellId> hcomp2(CellId left, CellId right) const override;
  const std::vector<CellId>& cells_with_src(HorId h) const override { return by_src_[h]; }
  const std::vector<CellId>& cells_with_tgt(HorId h) const override { return by_tgt_[h]; }

 private:
  std::shared_ptr<const DoubleCat> base_;
  std::vector<SqId> parent_;                 // cell id -> globular square id
  std::unordered_map<SqId, CellId> reverse_;
  std::vector<std::vector<CellId>> by_src_, by_tgt_;
};

/// A 2-category together with a category on the same objects.
struct DecoratedTwoCategory {
  std::shared_ptr<const TwoCat> two_cat;
  FiniteCategory vertical;
};

ValidationReport validate_two_category(const TwoCat& b, const ValidateOptions& opt = {});
ValidationReport validate_decoration(const DecoratedTwoCategory& d);

/// H*C = (C0, HC).
DecoratedTwoCategory decorated_horizontalization(std::shared_ptr<const DoubleCat> c);

/// Copies any 2-category into explicit tables (serialization, tests).
FiniteTwoCategory materialize_two_category(const TwoCat& b, const ValidateOptions& opt = {});

/// Structural equality of decorations: same vertical category, same 1-cell
/// tables, and a boundary-preserving identification of 2-cells by id.
bool decorated_equal(const DecoratedTwoCategory& a, const DecoratedTwoCategory& b);

}  // namespace dcat
