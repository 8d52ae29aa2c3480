#include "dcat/instances.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace dcat {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Functions [sa] -> [sb] as digit vectors, rank-ordered.
std::vector<std::vector<std::int8_t>> all_functions(int sa, int sb) {
  std::vector<std::vector<std::int8_t>> out;
  std::vector<std::int8_t> f(sa, 0);
  const int total = ipow(sb, sa);
  out.reserve(total);
  for (int r = 0; r < total; ++r) {
    out.push_back(f);
    for (int i = 0; i < sa; ++i) {
      if (++f[i] < sb) break;
      f[i] = 0;
    }
  }
  return out;
}

bool is_bijection(const std::vector<std::int8_t>& f, int sb) {
  if (static_cast<int>(f.size()) != sb) return false;
  std::uint32_t seen = 0;
  for (std::int8_t v : f) seen |= 1u << v;
  return static_cast<int>(std::popcount(seen)) == sb;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rel
// ---------------------------------------------------------------------------

RelCat::RelCat(int max_size) : n_(max_size) {
  if (n_ < 1 || n_ > 3) throw Error(Err::BudgetExceeded, "rel size must be between 1 and 3");

  FiniteCategory c0;
  for (int a = 0; a < n_; ++a) c0.add_object();
  std::vector<std::vector<std::vector<MorId>>> mor_id(n_, std::vector<std::vector<MorId>>(n_));
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c)
      for (const auto& f : all_functions(a + 1, c + 1)) {
        MorId m = c0.add_morphism(a, c);
        mor_id[a][c].push_back(m);
        std::array<std::int8_t, 3> d{0, 0, 0};
        std::copy(f.begin(), f.end(), d.begin());
        fn_digits_.push_back(d);
      }
  c0.finalize();
  for (int a = 0; a < n_; ++a) {
    int rank = 0;
    for (int x = 0; x < a + 1; ++x) rank += x * ipow(a + 1, x);
    c0.set_identity(a, mor_id[a][a][rank]);
  }
  for (MorId g = 0; g < c0.morphism_count(); ++g)
    for (MorId f = 0; f < c0.morphism_count(); ++f) {
      if (!c0.composable(g, f)) continue;
      int a = c0.src(f), c = c0.tgt(g);
      int rank = 0;
      for (int x = 0; x < a + 1; ++x) rank += fn_digits_[g][fn_digits_[f][x]] * ipow(c + 1, x);
      c0.set_composite(g, f, mor_id[a][c][rank]);
    }
  c0_ = std::move(c0);

  rel_offset_.assign(n_, std::vector<HorId>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      rel_offset_[a][b] = static_cast<HorId>(rel_bits_.size());
      const int cells = (a + 1) * (b + 1);
      for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
        rel_bits_.push_back(bits);
        hsrc_.push_back(a);
        htgt_.push_back(b);
      }
    }
  hunit_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    std::uint32_t diag = 0;
    for (int x = 0; x <= a; ++x) diag |= 1u << (x * (a + 1) + x);
    hunit_[a] = rel_offset_[a][a] + static_cast<HorId>(diag);
  }
}

HorId RelCat::rel_id(ObjId a, ObjId b, std::uint32_t bits) const {
  return rel_offset_[a][b] + static_cast<HorId>(bits);
}

HorId RelCat::hcompose(HorId left, HorId right) const {
  const int a = hsrc_[left], b = htgt_[left], c = htgt_[right];
  const std::uint32_t r = rel_bits_[left], s = rel_bits_[right];
  std::uint32_t t = 0;
  for (int x = 0; x <= a; ++x)
    for (int y = 0; y <= b; ++y) {
      if (!(r & (1u << (x * (b + 1) + y)))) continue;
      for (int z = 0; z <= c; ++z)
        if (s & (1u << (y * (c + 1) + z))) t |= 1u << (x * (c + 1) + z);
    }
  return rel_id(a, c, t);
}

std::uint32_t RelCat::image_bits(VertId f, VertId g, std::uint32_t rbits, int bsz, int dsz) const {
  std::uint32_t img = 0;
  while (rbits != 0) {
    const int bit = std::countr_zero(rbits);
    rbits &= rbits - 1;
    img |= 1u << (fn_digits_[f][bit / bsz] * dsz + fn_digits_[g][bit % bsz]);
  }
  return img;
}

bool RelCat::square_exists(const SquareBoundary& b) const {
  if (b.left < 0 || b.right < 0 || b.top < 0 || b.bottom < 0) return false;
  if (b.left >= c0_.morphism_count() || b.right >= c0_.morphism_count()) return false;
  if (b.top >= hcell_count() || b.bottom >= hcell_count()) return false;
  if (hsrc_[b.top] != c0_.src(b.left) || htgt_[b.top] != c0_.src(b.right)) return false;
  if (hsrc_[b.bottom] != c0_.tgt(b.left) || htgt_[b.bottom] != c0_.tgt(b.right)) return false;
  const int bsz = htgt_[b.top] + 1, dsz = htgt_[b.bottom] + 1;
  const std::uint32_t img = image_bits(b.left, b.right, rel_bits_[b.top], bsz, dsz);
  return (img & ~rel_bits_[b.bottom]) == 0;
}

SqId RelCat::encode(const SquareBoundary& b) const {
  return (static_cast<SqId>(b.left) << 26) | (static_cast<SqId>(b.right) << 20) |
         (static_cast<SqId>(b.top) << 10) | static_cast<SqId>(b.bottom);
}

SquareBoundary RelCat::boundary(SqId s) const {
  return {static_cast<VertId>((s >> 26) & 0x3f), static_cast<VertId>((s >> 20) & 0x3f),
          static_cast<HorId>((s >> 10) & 0x3ff), static_cast<HorId>(s & 0x3ff)};
}

SqId RelCat::unit_square(VertId f) const {
  return encode({f, f, hunit_[c0_.src(f)], hunit_[c0_.tgt(f)]});
}

SqId RelCat::videntity(HorId h) const {
  return encode({c0_.identity(hsrc_[h]), c0_.identity(htgt_[h]), h, h});
}

std::optional<SqId> RelCat::vcomp(SqId top, SqId bottom) const {
  if (!vcomposable(top, bottom)) return std::nullopt;
  return encode(vcomp_boundary(top, bottom));
}

std::optional<SqId> RelCat::hcomp(SqId left, SqId right) const {
  if (!hcomposable(left, right)) return std::nullopt;
  return encode(hcomp_boundary(left, right));
}

void RelCat::for_each_square(const std::function<void(SqId)>& fn) const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        for (int d = 0; d < n_; ++d) {
          const int topcells = (a + 1) * (b + 1), botcells = (c + 1) * (d + 1);
          const std::uint32_t botmask = (botcells == 32) ? 0xffffffffu : ((1u << botcells) - 1);
          for (MorId f = 0; f < c0_.morphism_count(); ++f) {
            if (c0_.src(f) != a || c0_.tgt(f) != c) continue;
            for (MorId g = 0; g < c0_.morphism_count(); ++g) {
              if (c0_.src(g) != b || c0_.tgt(g) != d) continue;
              for (std::uint32_t rbits = 0; rbits < (1u << topcells); ++rbits) {
                const std::uint32_t img = image_bits(f, g, rbits, b + 1, d + 1);
                const std::uint32_t comp = botmask & ~img;
                const HorId top = rel_offset_[a][b] + static_cast<HorId>(rbits);
                std::uint32_t x = 0;
                while (true) {
                  fn(encode({f, g, top, rel_offset_[c][d] + static_cast<HorId>(img | x)}));
                  if (x == comp) break;
                  x = (x - comp) & comp;
                }
              }
            }
          }
        }
}

std::int64_t RelCat::square_count() const {
  std::int64_t n = 0;
  for_each_square([&](SqId) { ++n; });
  return n;
}

std::vector<SqId> RelCat::squares_with_boundary(const SquareBoundary& b) const {
  if (square_exists(b)) return {encode(b)};
  return {};
}

std::vector<SqId> RelCat::squares_with_bottom(HorId h) const {
  std::vector<SqId> out;
  const int c = hsrc_[h], d = htgt_[h];
  const std::uint32_t sbits = rel_bits_[h];
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (MorId f = 0; f < c0_.morphism_count(); ++f) {
        if (c0_.src(f) != a || c0_.tgt(f) != c) continue;
        for (MorId g = 0; g < c0_.morphism_count(); ++g) {
          if (c0_.src(g) != b || c0_.tgt(g) != d) continue;
          std::uint32_t eq = 0;
          for (int x = 0; x <= a; ++x)
            for (int y = 0; y <= b; ++y)
              if (sbits & (1u << (fn_digits_[f][x] * (d + 1) + fn_digits_[g][y])))
                eq |= 1u << (x * (b + 1) + y);
          std::uint32_t r = 0;
          while (true) {
            out.push_back(encode({f, g, rel_offset_[a][b] + static_cast<HorId>(r), h}));
            if (r == eq) break;
            r = (r - eq) & eq;
          }
        }
      }
  return out;
}

std::vector<SqId> RelCat::squares_with_top(HorId h) const {
  std::vector<SqId> out;
  const int a = hsrc_[h], b = htgt_[h];
  const std::uint32_t rbits = rel_bits_[h];
  for (int c = 0; c < n_; ++c)
    for (int d = 0; d < n_; ++d) {
      const int botcells = (c + 1) * (d + 1);
      const std::uint32_t botmask = (1u << botcells) - 1;
      for (MorId f = 0; f < c0_.morphism_count(); ++f) {
        if (c0_.src(f) != a || c0_.tgt(f) != c) continue;
        for (MorId g = 0; g < c0_.morphism_count(); ++g) {
          if (c0_.src(g) != b || c0_.tgt(g) != d) continue;
          const std::uint32_t img = image_bits(f, g, rbits, b + 1, d + 1);
          const std::uint32_t comp = botmask & ~img;
          std::uint32_t x = 0;
          while (true) {
            out.push_back(encode({f, g, h, rel_offset_[c][d] + static_cast<HorId>(img | x)}));
            if (x == comp) break;
            x = (x - comp) & comp;
          }
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Span
// ---------------------------------------------------------------------------

namespace {

std::string span_key(ObjId a, ObjId b, const std::vector<std::int8_t>& l,
                     const std::vector<std::int8_t>& r) {
  std::ostringstream os;
  os << a << '|' << b << '|' << l.size();
  for (auto v : l) os << ',' << int(v);
  os << ';';
  for (auto v : r) os << ',' << int(v);
  return os.str();
}

std::string square_key(const SquareBoundary& b, const std::vector<std::int8_t>& m) {
  std::ostringstream os;
  os << b.left << '|' << b.right << '|' << b.top << '|' << b.bottom;
  for (auto v : m) os << ',' << int(v);
  return os.str();
}

}  // namespace

SpanCat::SpanCat(int max_object, int max_apex, bool invertible_frames_only)
    : nobj_(max_object), napex_(max_apex) {
  if (nobj_ < 1 || nobj_ > 3 || napex_ < nobj_ || napex_ > 3)
    throw Error(Err::BudgetExceeded,
                "span sizes must satisfy 1 <= objects <= 3 and objects <= apex <= 3");

  FiniteCategory c0;
  for (int a = 0; a < nobj_; ++a) c0.add_object();
  std::vector<std::vector<std::vector<MorId>>> mor_id(nobj_, std::vector<std::vector<MorId>>(nobj_));
  for (int a = 0; a < nobj_; ++a)
    for (int c = 0; c < nobj_; ++c)
      for (const auto& f : all_functions(a + 1, c + 1)) {
        if (invertible_frames_only && !(a == c && is_bijection(f, c + 1))) continue;
        mor_id[a][c].push_back(c0.add_morphism(a, c));
        fn_digits_.push_back(f);
      }
  c0.finalize();
  auto find_mor = [&](int a, int c, const std::vector<std::int8_t>& f) -> MorId {
    for (MorId m : mor_id[a][c])
      if (fn_digits_[m] == f) return m;
    return kNone;
  };
  for (int a = 0; a < nobj_; ++a) {
    std::vector<std::int8_t> idf(a + 1);
    for (int x = 0; x <= a; ++x) idf[x] = static_cast<std::int8_t>(x);
    c0.set_identity(a, find_mor(a, a, idf));
  }
  for (MorId g = 0; g < c0.morphism_count(); ++g)
    for (MorId f = 0; f < c0.morphism_count(); ++f) {
      if (!c0.composable(g, f)) continue;
      std::vector<std::int8_t> h(fn_digits_[f].size());
      for (std::size_t x = 0; x < h.size(); ++x) h[x] = fn_digits_[g][fn_digits_[f][x]];
      c0.set_composite(g, f, find_mor(c0.src(f), c0.tgt(g), h));
    }
  c0_ = std::move(c0);

  // Horizontal composition is by pullback, and pullbacks neither stay under
  // any apex cap nor admit a strictly unital-and-associative choice of
  // representatives (tied leg pairs permute differently across association
  // routes). The fragment therefore keeps composites of length at most one:
  // endpoint-matching pairs are in capacity only when one side is a unit
  // span, which concatenation absorbs strictly. All the vertical structure
  // (squares, their composition, factorization searches) is complete.
  for (int a = 0; a < nobj_; ++a)
    for (int b = 0; b < nobj_; ++b)
      for (int s = 0; s <= napex_; ++s)
        for (const auto& l : all_functions(s, a + 1))
          for (const auto& r : all_functions(s, b + 1)) {
            span_index_[span_key(a, b, l, r)] = static_cast<HorId>(legs_.size());
            legs_.emplace_back(l, r);
            hsrc_.push_back(a);
            htgt_.push_back(b);
          }
  hunit_.resize(nobj_);
  for (int a = 0; a < nobj_; ++a) {
    std::vector<std::int8_t> idf(a + 1);
    for (int x = 0; x <= a; ++x) idf[x] = static_cast<std::int8_t>(x);
    hunit_[a] = span_index_.at(span_key(a, a, idf, idf));
  }

  // Squares: apex maps commuting with the legs.
  for (HorId top = 0; top < static_cast<HorId>(legs_.size()); ++top)
    for (HorId bot = 0; bot < static_cast<HorId>(legs_.size()); ++bot)
      for (MorId f = 0; f < c0_.morphism_count(); ++f) {
        if (c0_.src(f) != hsrc_[top] || c0_.tgt(f) != hsrc_[bot]) continue;
        for (MorId g = 0; g < c0_.morphism_count(); ++g) {
          if (c0_.src(g) != htgt_[top] || c0_.tgt(g) != htgt_[bot]) continue;
          const auto& [l1, r1] = legs_[top];
          const auto& [l2, r2] = legs_[bot];
          // Per-point candidates, then the product of choices.
          std::vector<std::vector<std::int8_t>> cand(l1.size());
          bool any = true;
          for (std::size_t x = 0; x < l1.size() && any; ++x) {
            for (std::size_t y = 0; y < l2.size(); ++y)
              if (l2[y] == fn_digits_[f][l1[x]] && r2[y] == fn_digits_[g][r1[x]])
                cand[x].push_back(static_cast<std::int8_t>(y));
            any = !cand[x].empty();
          }
          if (!any) continue;
          std::vector<std::int8_t> m(l1.size(), 0);
          std::vector<std::size_t> pick(l1.size(), 0);
          while (true) {
            for (std::size_t x = 0; x < m.size(); ++x) m[x] = cand[x][pick[x]];
            SquareBoundary sb{f, g, top, bot};
            square_index_[square_key(sb, m)] = static_cast<SqId>(squares_.size());
            squares_.push_back(sb);
            maps_.push_back(m);
            std::size_t x = 0;
            for (; x < m.size(); ++x) {
              if (++pick[x] < cand[x].size()) break;
              pick[x] = 0;
            }
            if (x == m.size()) break;
          }
        }
      }

  unit_.resize(c0_.morphism_count());
  for (MorId f = 0; f < c0_.morphism_count(); ++f)
    unit_[f] = square_index_.at(
        square_key({f, f, hunit_[c0_.src(f)], hunit_[c0_.tgt(f)]}, fn_digits_[f]));
  vid_.resize(legs_.size());
  for (HorId h = 0; h < static_cast<HorId>(legs_.size()); ++h) {
    std::vector<std::int8_t> idm(legs_[h].first.size());
    for (std::size_t x = 0; x < idm.size(); ++x) idm[x] = static_cast<std::int8_t>(x);
    vid_[h] = square_index_.at(square_key(
        {c0_.identity(hsrc_[h]), c0_.identity(htgt_[h]), h, h}, idm));
  }
  build_indexes();
}

bool SpanCat::hcell_composite_within(HorId l, HorId r) const {
  return l == hunit_[hsrc_[l]] || r == hunit_[hsrc_[r]];
}

HorId SpanCat::hcompose(HorId left, HorId right) const {
  if (left == hunit_[hsrc_[left]]) return right;
  if (right == hunit_[hsrc_[right]]) return left;
  throw Error(Err::BudgetExceeded, "span composite exceeds the fragment's capacity");
}

SqId SpanCat::square_id(const SquareBoundary& b, const std::vector<std::int8_t>& m) const {
  return square_index_.at(square_key(b, m));
}

SqId SpanCat::compute_vcomp(SqId top, SqId bottom) const {
  const auto& m1 = maps_[static_cast<std::size_t>(top)];
  const auto& m2 = maps_[static_cast<std::size_t>(bottom)];
  std::vector<std::int8_t> m(m1.size());
  for (std::size_t x = 0; x < m1.size(); ++x) m[x] = m2[m1[x]];
  return square_id(vcomp_boundary(top, bottom), m);
}

SqId SpanCat::compute_hcomp(SqId left, SqId right) const {
  // In capacity only when each edge pair is unit-mediated, so the composite
  // edges are plain concatenations and the map pastes through directly.
  SquareBoundary lb = squares_[static_cast<std::size_t>(left)];
  SquareBoundary rb = squares_[static_cast<std::size_t>(right)];
  auto is_unit = [&](HorId h) { return h == hunit_[hsrc_[h]]; };
  const auto& m1 = maps_[static_cast<std::size_t>(left)];
  const auto& m2 = maps_[static_cast<std::size_t>(right)];
  std::vector<std::int8_t> m;
  if (is_unit(rb.top) && is_unit(rb.bottom)) {
    m = m1;
  } else if (is_unit(lb.top) && is_unit(lb.bottom)) {
    m = m2;
  } else if (is_unit(lb.top)) {
    // top edge from the right square, bottom from the left: elements land in
    // the left apex through the top middle object
    const auto& l_top = legs_[rb.top].first;
    m.resize(l_top.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[l_top[i]];
  } else {
    // top edge from the left square, bottom from the right: route through the
    // top middle object via the left span's right leg
    const auto& r_top = legs_[lb.top].second;
    m.resize(r_top.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m2[r_top[i]];
  }
  return square_id(hcomp_boundary(left, right), m);
}

// ---------------------------------------------------------------------------
// Commuting squares
// ---------------------------------------------------------------------------

CommutingSquaresCat::CommutingSquaresCat(FiniteCategory cat) {
  c0_ = std::move(cat);
  const std::int32_t nm = c0_.morphism_count();
  hsrc_.resize(nm);
  htgt_.resize(nm);
  for (MorId m = 0; m < nm; ++m) {
    hsrc_[m] = c0_.src(m);
    htgt_[m] = c0_.tgt(m);
  }
  hunit_.resize(c0_.object_count());
  for (ObjId a = 0; a < c0_.object_count(); ++a) hunit_[a] = c0_.identity(a);

  for (MorId f = 0; f < nm; ++f)
    for (MorId g = 0; g < nm; ++g)
      for (MorId top = 0; top < nm; ++top) {
        if (c0_.src(top) != c0_.src(f) || c0_.tgt(top) != c0_.src(g)) continue;
        for (MorId bot = 0; bot < nm; ++bot) {
          if (c0_.src(bot) != c0_.tgt(f) || c0_.tgt(bot) != c0_.tgt(g)) continue;
          if (c0_.raw_entry(g, top) != c0_.raw_entry(bot, f)) continue;
          squares_.push_back({f, g, top, bot});
        }
      }
  unit_.resize(nm);
  vid_.resize(nm);
  build_indexes();
  for (MorId f = 0; f < nm; ++f)
    unit_[f] = find_square({f, f, c0_.identity(c0_.src(f)), c0_.identity(c0_.tgt(f))});
  for (HorId h = 0; h < nm; ++h)
    vid_[h] = find_square({c0_.identity(hsrc_[h]), c0_.identity(htgt_[h]), h, h});
}

HorId CommutingSquaresCat::hcompose(HorId left, HorId right) const {
  return c0_.raw_entry(right, left);
}

SqId CommutingSquaresCat::compute_vcomp(SqId top, SqId bottom) const {
  return find_square(vcomp_boundary(top, bottom));
}

SqId CommutingSquaresCat::compute_hcomp(SqId left, SqId right) const {
  return find_square(hcomp_boundary(left, right));
}

// ---------------------------------------------------------------------------
// Monoid bundle and group double groupoid
// ---------------------------------------------------------------------------

MonoidBundleCat::MonoidBundleCat(CommMonoid m) : m_(std::move(m)) {
  FiniteCategory c0;
  ObjId o = c0.add_object();
  MorId id = c0.add_morphism(o, o);
  c0.finalize();
  c0.set_identity(o, id);
  c0.set_composite(id, id, id);
  c0_ = std::move(c0);
  hsrc_ = {0};
  htgt_ = {0};
  hunit_ = {0};
  for (ElemId e = 0; e < m_.size; ++e) squares_.push_back({0, 0, 0, 0});
  unit_ = {m_.unit};
  vid_ = {m_.unit};
  build_indexes();
}

SqId MonoidBundleCat::compute_vcomp(SqId top, SqId bottom) const {
  return m_.apply(static_cast<ElemId>(top), static_cast<ElemId>(bottom));
}

SqId MonoidBundleCat::compute_hcomp(SqId left, SqId right) const {
  return m_.apply(static_cast<ElemId>(left), static_cast<ElemId>(right));
}

GroupDoubleGroupoidCat::GroupDoubleGroupoidCat(int vertical_order, CommMonoid a, bool twisted)
    : k_(vertical_order), a_(std::move(a)), twisted_(twisted) {
  if (k_ < 1 || k_ > 6 || a_.size > 8)
    throw Error(Err::BudgetExceeded, "group double groupoid parameters out of budget");
  if (twisted_) {
    if (k_ % 2 != 0)
      throw Error(Err::RangeError, "inversion monodromy needs an even vertical order");
    inverse_.assign(a_.size, kNone);
    for (ElemId x = 0; x < a_.size; ++x)
      for (ElemId y = 0; y < a_.size; ++y)
        if (a_.apply(x, y) == a_.unit) inverse_[x] = y;
    for (ElemId x = 0; x < a_.size; ++x)
      if (inverse_[x] == kNone)
        throw Error(Err::RangeError, "inversion monodromy needs a coefficient group");
  }
  FiniteCategory c0;
  ObjId o = c0.add_object();
  for (int v = 0; v < k_; ++v) c0.add_morphism(o, o);
  c0.finalize();
  c0.set_identity(o, 0);
  for (int g = 0; g < k_; ++g)
    for (int f = 0; f < k_; ++f) c0.set_composite(g, f, (f + g) % k_);
  c0_ = std::move(c0);
  hsrc_ = {0};
  htgt_ = {0};
  hunit_ = {0};
  if (twisted_) {
    for (int v = 0; v < k_; ++v)
      for (ElemId e = 0; e < a_.size; ++e) squares_.push_back({v, v, 0, 0});
  } else {
    for (int v1 = 0; v1 < k_; ++v1)
      for (int v2 = 0; v2 < k_; ++v2)
        for (ElemId e = 0; e < a_.size; ++e) squares_.push_back({v1, v2, 0, 0});
  }
  unit_.resize(k_);
  for (int v = 0; v < k_; ++v) unit_[v] = id_of(v, v, a_.unit);
  vid_ = {id_of(0, 0, a_.unit)};
  build_indexes();
}

SqId GroupDoubleGroupoidCat::compute_vcomp(SqId top, SqId bottom) const {
  SquareBoundary t = squares_[static_cast<std::size_t>(top)];
  SquareBoundary b = squares_[static_cast<std::size_t>(bottom)];
  ElemId x = static_cast<ElemId>(top % a_.size), y = static_cast<ElemId>(bottom % a_.size);
  return id_of((t.left + b.left) % k_, (t.right + b.right) % k_, a_.apply(act(b.left, x), y));
}

SqId GroupDoubleGroupoidCat::compute_hcomp(SqId left, SqId right) const {
  SquareBoundary l = squares_[static_cast<std::size_t>(left)];
  SquareBoundary r = squares_[static_cast<std::size_t>(right)];
  ElemId x = static_cast<ElemId>(left % a_.size), y = static_cast<ElemId>(right % a_.size);
  return id_of(l.left, r.right, a_.apply(x, y));
}

// ---------------------------------------------------------------------------
// Named monoids and categories
// ---------------------------------------------------------------------------

CommMonoid make_trivial_monoid() { return {1, 0, {0}}; }

CommMonoid make_cyclic_group(int k) {
  CommMonoid m;
  m.size = k;
  m.unit = 0;
  m.op.resize(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m.op[static_cast<std::size_t>(a) * k + b] = (a + b) % k;
  return m;
}

CommMonoid make_or_monoid() { return {2, 0, {0, 1, 1, 1}}; }

CommMonoid make_absorbing_monoid() {
  // {e, x, z}: x*x = z, z absorbing. Gives unit squares with multiple factors.
  return {3, 0, {0, 1, 2, 1, 2, 2, 2, 2, 2}};
}

FiniteCategory make_path2_category() {
  FiniteCategory c;
  ObjId o0 = c.add_object(), o1 = c.add_object(), o2 = c.add_object();
  MorId i0 = c.add_morphism(o0, o0), i1 = c.add_morphism(o1, o1), i2 = c.add_morphism(o2, o2);
  MorId e1 = c.add_morphism(o0, o1), e2 = c.add_morphism(o1, o2), e21 = c.add_morphism(o0, o2);
  c.finalize();
  c.set_identity(o0, i0);
  c.set_identity(o1, i1);
  c.set_identity(o2, i2);
  c.set_composite(i0, i0, i0);
  c.set_composite(i1, i1, i1);
  c.set_composite(i2, i2, i2);
  c.set_composite(e1, i0, e1);
  c.set_composite(i1, e1, e1);
  c.set_composite(e2, i1, e2);
  c.set_composite(i2, e2, e2);
  c.set_composite(e21, i0, e21);
  c.set_composite(i2, e21, e21);
  c.set_composite(e2, e1, e21);
  return c;
}

FiniteCategory make_cyclic_group_category(int k) {
  FiniteCategory c;
  ObjId o = c.add_object();
  for (int i = 0; i < k; ++i) c.add_morphism(o, o);
  c.finalize();
  c.set_identity(o, 0);
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f) c.set_composite(g, f, (f + g) % k);
  return c;
}

FiniteCategory make_discrete_category(int objects) {
  FiniteCategory c;
  for (int i = 0; i < objects; ++i) c.add_object();
  for (int i = 0; i < objects; ++i) c.set_identity(i, c.add_morphism(i, i));
  c.finalize();
  for (int i = 0; i < objects; ++i) c.set_composite(i, i, i);
  return c;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

std::shared_ptr<RelCat> build_rel(int n) { return std::make_shared<RelCat>(n); }

std::shared_ptr<SpanCat> build_span(const SpanParams& p, bool invertible_frames_only) {
  return std::make_shared<SpanCat>(p.max_object, p.max_apex, invertible_frames_only);
}

std::shared_ptr<CommutingSquaresCat> build_commuting_squares(FiniteCategory cat) {
  ValidationReport rep = validate_category(cat);
  if (!rep.ok()) throw Error(Err::RangeError, "commuting-squares base category is invalid");
  return std::make_shared<CommutingSquaresCat>(std::move(cat));
}

std::shared_ptr<MonoidBundleCat> build_monoid_bundle(CommMonoid m) {
  ValidationReport rep = validate_monoid(m);
  if (!rep.ok()) throw Error(Err::RangeError, "monoid bundle coefficient table is invalid");
  return std::make_shared<MonoidBundleCat>(std::move(m));
}

std::shared_ptr<GroupDoubleGroupoidCat> build_group_double_groupoid(int vertical_order,
                                                                    CommMonoid a, bool twisted) {
  ValidationReport rep = validate_monoid(a);
  if (!rep.ok()) throw Error(Err::RangeError, "coefficient monoid table is invalid");
  return std::make_shared<GroupDoubleGroupoidCat>(vertical_order, std::move(a), twisted);
}

NatEndoResult nat_endomorphisms_monoid(const FiniteCategory& cat, std::uint64_t budget) {
  std::vector<std::vector<MorId>> endos(cat.object_count());
  for (MorId m = 0; m < cat.morphism_count(); ++m)
    if (cat.src(m) == cat.tgt(m)) endos[cat.src(m)].push_back(m);
  std::uint64_t space = 1;
  for (auto& e : endos) {
    space *= e.size();
    if (space > budget) throw Error(Err::BudgetExceeded, "natural endomorphism search too large");
  }

  std::vector<std::vector<MorId>> families;
  std::vector<MorId> nu(cat.object_count(), kNone);
  auto natural_so_far = [&](ObjId just) {
    for (MorId f = 0; f < cat.morphism_count(); ++f) {
      ObjId x = cat.src(f), y = cat.tgt(f);
      if (nu[x] == kNone || nu[y] == kNone) continue;
      if (x != just && y != just) continue;
      if (cat.raw_entry(nu[y], f) != cat.raw_entry(f, nu[x])) return false;
    }
    return true;
  };
  std::function<void(ObjId)> rec = [&](ObjId a) {
    if (a == cat.object_count()) {
      families.push_back(nu);
      return;
    }
    for (MorId cand : endos[a]) {
      nu[a] = cand;
      if (natural_so_far(a)) rec(a + 1);
    }
    nu[a] = kNone;
  };
  rec(0);
  std::sort(families.begin(), families.end());

  NatEndoResult out;
  out.families = families;
  const std::int32_t n = static_cast<std::int32_t>(families.size());
  out.monoid.size = n;
  out.monoid.op.assign(static_cast<std::size_t>(n) * n, kNone);
  std::vector<MorId> ids(cat.object_count());
  for (ObjId a = 0; a < cat.object_count(); ++a) ids[a] = cat.identity(a);
  auto find = [&](const std::vector<MorId>& fam) {
    auto it = std::lower_bound(families.begin(), families.end(), fam);
    if (it == families.end() || *it != fam)
      throw Error(Err::EckmannHiltonViolation, "natural endomorphisms are not closed under composition");
    return static_cast<ElemId>(it - families.begin());
  };
  out.monoid.unit = find(ids);
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) {
      std::vector<MorId> comp(cat.object_count());
      for (ObjId a = 0; a < cat.object_count(); ++a)
        comp[a] = cat.raw_entry(families[j][a], families[i][a]);
      out.monoid.op[static_cast<std::size_t>(i) * n + j] = find(comp);
    }
  ValidationReport rep = validate_monoid(out.monoid);
  if (!rep.ok())
    throw Error(Err::EckmannHiltonViolation, "natural endomorphism monoid failed its law check");
  return out;
}

namespace {

CommMonoid named_monoid(const std::string& name) {
  if (name == "trivial") return make_trivial_monoid();
  if (name == "z2") return make_cyclic_group(2);
  if (name == "z3") return make_cyclic_group(3);
  if (name == "z4") return make_cyclic_group(4);
  if (name == "or") return make_or_monoid();
  if (name == "absorbing") return make_absorbing_monoid();
  throw Error(Err::SchemaError, "unknown monoid name: " + name);
}

FiniteCategory named_category(const std::string& name) {
  if (name == "path2") return make_path2_category();
  if (name == "z2") return make_cyclic_group_category(2);
  if (name == "z3") return make_cyclic_group_category(3);
  if (name == "discrete2") return make_discrete_category(2);
  throw Error(Err::SchemaError, "unknown category name: " + name);
}

}  // namespace

InstanceSpec parse_instance_spec(const std::string& kind, const std::string& restriction, int n,
                                 int apex, const std::string& monoid, const std::string& category,
                                 bool twisted) {
  InstanceSpec s;
  if (kind == "rel")
    s.kind = InstanceSpec::Kind::Rel;
  else if (kind == "span")
    s.kind = InstanceSpec::Kind::Span;
  else if (kind == "commuting_squares")
    s.kind = InstanceSpec::Kind::CommutingSquares;
  else if (kind == "monoid_bundle")
    s.kind = InstanceSpec::Kind::MonoidBundle;
  else if (kind == "group_double_groupoid")
    s.kind = InstanceSpec::Kind::GroupDoubleGroupoid;
  else
    throw Error(Err::SchemaError, "unknown instance kind: " + kind);
  if (restriction == "" || restriction == "none")
    s.restriction = InstanceSpec::Restriction::None;
  else if (restriction == "star")
    s.restriction = InstanceSpec::Restriction::Star;
  else if (restriction == "tilde")
    s.restriction = InstanceSpec::Restriction::Tilde;
  else if (restriction == "hat")
    s.restriction = InstanceSpec::Restriction::Hat;
  else
    throw Error(Err::SchemaError, "unknown restriction: " + restriction);
  s.n = n;
  s.apex = apex;
  s.monoid = monoid;
  s.category = category;
  s.twisted = twisted;
  return s;
}

std::shared_ptr<const DoubleCat> build_instance(const InstanceSpec& spec) {
  std::shared_ptr<const DoubleCat> base;
  switch (spec.kind) {
    case InstanceSpec::Kind::Rel:
      base = build_rel(spec.n);
      break;
    case InstanceSpec::Kind::Span:
      // The star restriction is generated directly (invertible frames only);
      // the unrestricted span fragment at these sizes is the full builder.
      if (spec.restriction == InstanceSpec::Restriction::Star)
        return build_span({spec.n, spec.apex}, /*invertible_frames_only=*/true);
      base = build_span({spec.n, spec.apex});
      break;
    case InstanceSpec::Kind::CommutingSquares:
      base = build_commuting_squares(named_category(spec.category));
      break;
    case InstanceSpec::Kind::MonoidBundle:
      base = build_monoid_bundle(named_monoid(spec.monoid));
      break;
    case InstanceSpec::Kind::GroupDoubleGroupoid:
      base = build_group_double_groupoid(spec.n, named_monoid(spec.monoid), spec.twisted);
      break;
  }
  switch (spec.restriction) {
    case InstanceSpec::Restriction::None:
      return base;
    case InstanceSpec::Restriction::Star:
      return restrict_star(base);
    case InstanceSpec::Restriction::Tilde:
      return restrict_tilde(base);
    case InstanceSpec::Restriction::Hat:
      return restrict_hat(base);
  }
  return base;
}

}  // namespace dcat
