#pragma once

#include <memory>

#include "dcat/indexing.hpp"

namespace dcat {

/// A square of the crossed product: a 2-cell of B, or a triple
/// (down: 1_b => beta, mid: a -> b with mid != id, up: alpha => 1_a).
struct CpSquare {
  bool is_globular = true;
  CellId cell = kNone;  // globular case
  CellId down = kNone;
  VertId mid = kNone;
  CellId up = kNone;

  static CpSquare globular(CellId c) { return {true, c, kNone, kNone, kNone}; }
  static CpSquare triple(CellId down, VertId mid, CellId up) {
    return {false, kNone, down, mid, up};
  }
  bool operator==(const CpSquare&) const = default;
};

struct CpEqualDecision {
  bool equal = false;
  std::optional<ElemId> nu;  // witness for the one-step relation
};

/// One-step relation of the construction: for triples over the same boundary,
/// exists nu with (opindexing) s.down = [nu; t.down] and t.up = [s.up;
/// Phi_f(nu)]; the indexing direction is mirrored. Globular squares compare as
/// 2-cells. Reflexive; the builder closes it transitively/symmetrically.
CpEqualDecision cp_equal(const Pi2Indexing& phi, const CpSquare& s, const CpSquare& t);

/// Compositions on raw (unquotiented) representations; results normalized so
/// a triple over an identity becomes the 2-cell [up; down].
CpSquare cp_vcomp(const Pi2Indexing& phi, const CpSquare& top, const CpSquare& bottom);
CpSquare cp_hcomp(const Pi2Indexing& phi, const CpSquare& left, const CpSquare& right);

/// The materialized crossed product: square ids are the 2-cells of B followed
/// by the nu-classes of triples (represented by their least member).
class CrossedProductCat : public MaterializedDoubleCat {
 public:
  explicit CrossedProductCat(Pi2Indexing phi);

  const Pi2Indexing& indexing() const { return phi_; }
  const TwoCat& base_two_cat() const { return *phi_.base.two_cat; }
  std::int64_t globular_count() const { return static_cast<std::int64_t>(ncells_); }
  std::int64_t class_count() const { return static_cast<std::int64_t>(classes_.size()); }
  bool nu_one_step_complete() const { return nu_one_step_complete_; }

  CpSquare decode(SqId s) const;
  SqId encode(const CpSquare& q) const;  // maps a triple to its class id
  const std::vector<CpSquare>& class_members(SqId s) const;

  HorId hcompose(HorId left, HorId right) const override {
    return phi_.base.two_cat->compose1(left, right);
  }
  bool hcell_composite_within(HorId l, HorId r) const override {
    return phi_.base.two_cat->compose1_within(l, r);
  }
  bool composition_by_construction() const override { return true; }

 protected:
  SqId compute_vcomp(SqId top, SqId bottom) const override;
  SqId compute_hcomp(SqId left, SqId right) const override;

 private:
  static std::uint64_t triple_key(CellId down, VertId mid, CellId up) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(down)) << 34) ^
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(mid)) << 28) ^
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(up));
  }

  Pi2Indexing phi_;
  std::int64_t ncells_ = 0;
  std::vector<std::vector<CpSquare>> classes_;        // sorted members, rep first
  std::unordered_map<std::uint64_t, SqId> class_of_;  // triple -> square id
  bool nu_one_step_complete_ = true;
};

struct CrossedProduct {
  std::shared_ptr<CrossedProductCat> dc;
  Pi2Indexing phi;  // same tables the construction used
};

/// Enumerates all squares, quotients triples by the closure of the one-step
/// relation and tabulates both compositions. Requires validate_decoration and
/// validate_indexing to pass.
CrossedProduct build_crossed_product(const Pi2Indexing& phi);

/// The unique double functor q -> C with identity decorated horizontalization:
/// globular cells map to their squares, a class of (down, f, up) maps to
/// vcomp(up, U(f), down) computed in C. phi must be view-backed over C or
/// structurally rebased; throws BaseMismatch / NotInducing / IllFormedComposite.
DoubleFunctorTable evaluation_functor(const CrossedProduct& q, std::shared_ptr<const DoubleCat> c);

struct EvalCheckOptions {
  ValidateOptions validate;
  bool informational_fullness_on_all = false;  // also report fullness onto all of C
};

/// (i) double-functor laws, (ii) H*! = id, (iii) fullness onto the globularly
/// generated piece, (iv) image forcing re-derived from every class member.
ValidationReport check_eval_properties(const DoubleFunctorTable& bang, const CrossedProduct& q,
                                       const DoubleCat& c, const EvalCheckOptions& opt = {});

struct InjectivityDecision {
  bool injective = true;
  SqId first = kNone, second = kNone;  // distinct crossed-product squares
  SqId image = kNone;                  // their shared image
};

InjectivityDecision check_eval_injective(const DoubleFunctorTable& bang, const CrossedProduct& q,
                                         const DoubleCat& c);

}  // namespace dcat
