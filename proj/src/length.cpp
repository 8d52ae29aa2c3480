#include "dcat/length.hpp"

#include <algorithm>
#include <deque>

namespace dcat {

namespace {

// Worklist closure of a seed set under square composition. Globular-globular
// pairs are never processed: their composites have identity frames, and every
// globular square is a seed, so they cannot add anything. Members are bucketed
// by the edges and frames a partner must match, with globular seeds kept in
// separate static buckets so non-seed processing stays proportional to the
// non-globular population.
class Closure {
 public:
  Closure(const DoubleCat& c, bool use_vcomp, bool use_hcomp, std::uint64_t budget)
      : c_(c), use_vcomp_(use_vcomp), use_hcomp_(use_hcomp), budget_(budget) {
    const std::int32_t nh = c.hcell_count();
    const std::int32_t nv = c.vertical_category().morphism_count();
    glob_by_top_.assign(nh, {});
    glob_by_bottom_.assign(nh, {});
    rest_by_top_.assign(nh, {});
    rest_by_bottom_.assign(nh, {});
    glob_by_left_.assign(nv, {});
    glob_by_right_.assign(nv, {});
    rest_by_left_.assign(nv, {});
    rest_by_right_.assign(nv, {});
  }

  void seed(SqId s) { insert(s, PastingTrace{PastingTrace::Kind::Seed, kNone, kNone}); }

  void run() {
    while (!work_.empty()) {
      SqId s = work_.front();
      work_.pop_front();
      process(s);
    }
  }

  bool contains(SqId s) const { return trace_.count(s) != 0; }
  const std::unordered_map<SqId, PastingTrace>& trace() const { return trace_; }

 private:
  void insert(SqId s, PastingTrace t) {
    if (!trace_.emplace(s, t).second) return;
    if (!spend(1)) throw Error(Err::BudgetExceeded, "closure exceeded tuple budget");
    SquareBoundary b = c_.boundary(s);
    bool glob = c_.is_globular(s);
    auto& bt = glob ? glob_by_top_ : rest_by_top_;
    auto& bb = glob ? glob_by_bottom_ : rest_by_bottom_;
    auto& bl = glob ? glob_by_left_ : rest_by_left_;
    auto& br = glob ? glob_by_right_ : rest_by_right_;
    bt[b.top].push_back(s);
    bb[b.bottom].push_back(s);
    bl[b.left].push_back(s);
    br[b.right].push_back(s);
    work_.push_back(s);
  }

  bool spend(std::uint64_t n) {
    if (budget_ < n) return false;
    budget_ -= n;
    return true;
  }

  void process(SqId s) {
    SquareBoundary b = c_.boundary(s);
    const bool s_glob = c_.is_globular(s);
    if (use_vcomp_) {
      pair_sweep(s, rest_by_top_[b.bottom], /*vertical=*/true, /*s_first=*/true);
      pair_sweep(s, rest_by_bottom_[b.top], /*vertical=*/true, /*s_first=*/false);
      if (!s_glob) {
        pair_sweep(s, glob_by_top_[b.bottom], true, true);
        pair_sweep(s, glob_by_bottom_[b.top], true, false);
      }
    }
    if (use_hcomp_) {
      pair_sweep(s, rest_by_left_[b.right], /*vertical=*/false, /*s_first=*/true);
      pair_sweep(s, rest_by_right_[b.left], /*vertical=*/false, /*s_first=*/false);
      if (!s_glob) {
        pair_sweep(s, glob_by_left_[b.right], false, true);
        pair_sweep(s, glob_by_right_[b.left], false, false);
      }
    }
  }

  void pair_sweep(SqId s, const std::vector<SqId>& partners, bool vertical, bool s_first) {
    // partners may grow while we iterate; that is fine, new members are
    // processed from the worklist anyway.
    const std::size_t n = partners.size();
    for (std::size_t i = 0; i < n; ++i) {
      SqId t = partners[i];
      SqId a = s_first ? s : t;
      SqId b = s_first ? t : s;
      if (!spend(1)) throw Error(Err::BudgetExceeded, "closure exceeded tuple budget");
      std::optional<SqId> r = vertical ? c_.vcomp(a, b) : c_.hcomp(a, b);
      if (!r) continue;
      insert(*r, PastingTrace{vertical ? PastingTrace::Kind::VComp : PastingTrace::Kind::HComp, a, b});
    }
  }

  const DoubleCat& c_;
  bool use_vcomp_, use_hcomp_;
  std::uint64_t budget_;
  std::unordered_map<SqId, PastingTrace> trace_;
  std::deque<SqId> work_;
  std::vector<std::vector<SqId>> glob_by_top_, glob_by_bottom_, rest_by_top_, rest_by_bottom_;
  std::vector<std::vector<SqId>> glob_by_left_, glob_by_right_, rest_by_left_, rest_by_right_;
};

std::vector<SqId> seed_squares(const DoubleCat& c) {
  std::vector<SqId> seeds;
  c.for_each_square([&](SqId s) {
    if (c.is_globular(s)) seeds.push_back(s);
  });
  for (VertId f = 0; f < c.vertical_category().morphism_count(); ++f)
    seeds.push_back(c.unit_square(f));
  return seeds;
}

}  // namespace

GammaPiece globularly_generated_piece(const DoubleCat& c, const ValidateOptions& opt) {
  Closure cl(c, true, true, opt.max_tuples);
  for (SqId s : seed_squares(c)) cl.seed(s);
  cl.run();
  GammaPiece out;
  out.trace = cl.trace();
  out.squares.reserve(out.trace.size());
  for (auto& [s, t] : out.trace) out.squares.push_back(s);
  std::sort(out.squares.begin(), out.squares.end());
  return out;
}

LengthOneDecision is_length_one(const DoubleCat& c, const ValidateOptions& opt) {
  // H: hcomp closure of globular + unit squares.
  Closure h(c, false, true, opt.max_tuples);
  for (SqId s : seed_squares(c)) h.seed(s);
  h.run();
  // V: vcomp closure of H.
  Closure v(c, true, false, opt.max_tuples);
  for (auto& [s, t] : h.trace()) v.seed(s);
  v.run();

  GammaPiece gamma = globularly_generated_piece(c, opt);
  LengthOneDecision out;
  out.stack_closure_size = v.trace().size();
  out.gamma_size = gamma.squares.size();
  for (SqId s : gamma.squares)
    if (!v.contains(s)) {
      out.witness = s;
      out.length_one = false;
      return out;
    }
  out.length_one = true;
  return out;
}

std::optional<CanonicalDecomposition> canonical_decomposition(const DoubleCat& c, SqId s) {
  const FiniteCategory& c0 = c.vertical_category();
  SquareBoundary b = c.boundary(s);
  if (b.left != b.right) return std::nullopt;
  const VertId mid = b.left;
  const ObjId a = c0.src(mid), z = c0.tgt(mid);

  if (c0.is_identity(mid)) {
    // Degenerate case: triples over an identity are plain two-cell stacks.
    std::vector<SqId> ups;
    for (SqId u : c.squares_with_top(b.top))
      if (c.is_globular(u)) ups.push_back(u);
    std::sort(ups.begin(), ups.end());
    for (SqId u : ups) {
      std::vector<SqId> downs =
          c.squares_with_boundary({c0.identity(a), c0.identity(z), c.boundary(u).bottom, b.bottom});
      std::sort(downs.begin(), downs.end());
      for (SqId d : downs) {
        auto r = c.vcomp(u, d);
        if (r && *r == s) return CanonicalDecomposition{u, mid, d};
      }
    }
    return std::nullopt;
  }

  SqId unit = c.unit_square(mid);
  std::vector<SqId> ups =
      c.squares_with_boundary({c0.identity(a), c0.identity(a), b.top, c.hunit(a)});
  std::sort(ups.begin(), ups.end());
  std::vector<SqId> downs =
      c.squares_with_boundary({c0.identity(z), c0.identity(z), c.hunit(z), b.bottom});
  std::sort(downs.begin(), downs.end());
  for (SqId u : ups) {
    auto half = c.vcomp(u, unit);
    if (!half) continue;
    for (SqId d : downs) {
      auto r = c.vcomp(*half, d);
      if (r && *r == s) return CanonicalDecomposition{u, mid, d};
    }
  }
  return std::nullopt;
}

CanonicalAllDecision all_squares_canonical(const DoubleCat& c, const ValidateOptions& opt) {
  GammaPiece gamma = globularly_generated_piece(c, opt);
  CanonicalAllDecision out;
  for (SqId s : gamma.squares)
    if (!canonical_decomposition(c, s)) {
      out.witness = s;
      out.all_canonical = false;
      return out;
    }
  out.all_canonical = true;
  return out;
}

}  // namespace dcat
