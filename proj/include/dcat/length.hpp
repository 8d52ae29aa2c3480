#pragma once

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dcat/doublecat.hpp"

namespace dcat {

/// How a square of a closure was reached: a seed, or a pasting of two members.
struct PastingTrace {
  enum class Kind { Seed, VComp, HComp } kind = Kind::Seed;
  SqId first = kNone;   // top / left parent
  SqId second = kNone;  // bottom / right parent
};

/// The globularly generated piece: every square reachable from the globular
/// and unit squares under both compositions, with a replayable trace each.
struct GammaPiece {
  std::vector<SqId> squares;  // sorted
  std::unordered_map<SqId, PastingTrace> trace;

  bool contains(SqId s) const { return trace.count(s) != 0; }
};

GammaPiece globularly_generated_piece(const DoubleCat& c, const ValidateOptions& opt = {});

struct LengthOneDecision {
  bool length_one = false;
  std::optional<SqId> witness;  // a gamma square not reachable as a vertical
                                // stack of globular and unit squares
  std::uint64_t stack_closure_size = 0;
  std::uint64_t gamma_size = 0;
};

/// S0 = globular + unit squares; H = hcomp-closure of S0; V = vcomp-closure
/// of H. Length one iff V covers the globularly generated piece.
LengthOneDecision is_length_one(const DoubleCat& c, const ValidateOptions& opt = {});

/// s = vcomp(up, U(mid), down) with globular up and down. For identity mid
/// the unit square degenerates and the witness is a two-factor stack
/// s = vcomp(up, down), matching the identification of (x, id, y) triples
/// with plain 2-cells.
struct CanonicalDecomposition {
  SqId up = kNone;
  VertId mid = kNone;
  SqId down = kNone;
};

std::optional<CanonicalDecomposition> canonical_decomposition(const DoubleCat& c, SqId s);

struct CanonicalAllDecision {
  bool all_canonical = false;
  std::optional<SqId> witness;
};

/// canonical_decomposition over every square of the globularly generated piece.
CanonicalAllDecision all_squares_canonical(const DoubleCat& c, const ValidateOptions& opt = {});

}  // namespace dcat
