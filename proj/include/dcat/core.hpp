#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcat {

using ObjId = std::int32_t;
using MorId = std::int32_t;
using ElemId = std::int32_t;
using HorId = std::int32_t;
using VertId = std::int32_t;   // vertical morphisms are morphisms of C0
using SqId = std::int64_t;

constexpr std::int32_t kNone = -1;

enum class Err {
  BoundaryMismatch,
  MissingEntry,
  DirectionMismatch,
  BaseMismatch,
  NotInducing,
  NoFactorization,
  NonUniqueFactorization,
  NotFramed,
  IllFormedComposite,
  EckmannHiltonViolation,
  BudgetExceeded,
  SyntaxError,
  SchemaError,
  RangeError,
  Usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

/// One violated law with a machine-readable witness (law id + offending ids).
struct Violation {
  std::string law;
  std::vector<std::int64_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::uint64_t tuples_checked = 0;
  // "exhaustive" or "thin-structural"; set by the double-category validator.
  std::string mode = "exhaustive";

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::int64_t> witness, std::string detail = {}) {
    violations.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
  void merge(const ValidationReport& other);
};

/// A finite category as explicit tables: morphism records, identity table and
/// a total-on-composable-pairs composition table.
///
/// Composition order convention (global for the whole library):
/// compose(second, first) means "first then second", so it is defined exactly
/// when tgt(first) == src(second).
class FiniteCategory {
 public:
  struct Mor {
    ObjId src = kNone;
    ObjId tgt = kNone;
  };

  FiniteCategory() = default;
  FiniteCategory(std::int32_t object_count, std::vector<Mor> morphisms,
                 std::vector<MorId> identity, std::vector<MorId> comp_table);

  std::int32_t object_count() const { return objects_; }
  std::int32_t morphism_count() const { return static_cast<std::int32_t>(mor_.size()); }
  ObjId src(MorId m) const { return mor_[m].src; }
  ObjId tgt(MorId m) const { return mor_[m].tgt; }
  MorId identity(ObjId a) const { return identity_[a]; }
  bool is_identity(MorId m) const { return identity_[mor_[m].src] == m && mor_[m].src == mor_[m].tgt; }

  bool composable(MorId second, MorId first) const { return tgt(first) == src(second); }

  /// Table entry for "first then second". Throws BoundaryMismatch/MissingEntry.
  MorId compose(MorId second, MorId first) const;

  /// Like compose but returns nullopt on a boundary mismatch. A legal pair
  /// with no table entry still throws MissingEntry (malformed input).
  std::optional<MorId> try_compose(MorId second, MorId first) const;

  MorId raw_entry(MorId second, MorId first) const {
    return comp_[static_cast<std::size_t>(second) * mor_.size() + first];
  }

  bool operator==(const FiniteCategory& o) const {
    return objects_ == o.objects_ && mor_eq(o) && identity_ == o.identity_ && comp_ == o.comp_;
  }

  // Incremental construction (instance builders, tests, parser).
  ObjId add_object();
  MorId add_morphism(ObjId src, ObjId tgt);
  void set_identity(ObjId a, MorId m) { identity_[a] = m; }
  void set_composite(MorId second, MorId first, MorId result);
  void finalize();  // sizes the composition table if still empty

 private:
  bool mor_eq(const FiniteCategory& o) const;

  std::int32_t objects_ = 0;
  std::vector<Mor> mor_;
  std::vector<MorId> identity_;
  std::vector<MorId> comp_;  // dense morphism_count^2, kNone where undefined
};

/// Lists every violated category law with a witness; empty iff valid.
ValidationReport validate_category(const FiniteCategory& cat);

struct IsoDecision {
  bool is_iso = false;
  std::optional<MorId> inverse;
};

/// Brute-force two-sided inverse search.
IsoDecision is_isomorphism(const FiniteCategory& cat, MorId f);

/// A commutative monoid as an explicit element set with a dense operation table.
struct CommMonoid {
  std::int32_t size = 0;
  ElemId unit = kNone;
  std::vector<ElemId> op;  // dense size^2

  ElemId apply(ElemId a, ElemId b) const { return op[static_cast<std::size_t>(a) * size + b]; }
  bool operator==(const CommMonoid& o) const { return size == o.size && unit == o.unit && op == o.op; }
};

ValidationReport validate_monoid(const CommMonoid& m);

/// Object and morphism maps of a functor between finite categories.
struct FunctorTable {
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
};

ValidationReport validate_functor(const FunctorTable& f, const FiniteCategory& dom,
                                  const FiniteCategory& cod);

}  // namespace dcat
