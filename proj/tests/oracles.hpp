#pragma once

// Independent brute-force oracles the tests compare the library against.
// Everything here is deliberately written from scratch against the raw
// definitions (paths, subsets, pointwise maps), not via the library types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// --- free category on the 2-path, morphisms as label strings ---------------

struct PathCat {
  // objects 0,1,2; morphisms are edge strings: "" at an object (identity),
  // "a": 0->1, "b": 1->2, "ba": 0->2.
  struct Mor {
    std::string word;
    int src, tgt;
  };
  std::vector<Mor> mors{{"", 0, 0}, {"", 1, 1}, {"", 2, 2}, {"a", 0, 1}, {"b", 1, 2}, {"ba", 0, 2}};

  int compose(int second, int first) const {
    if (mors[first].tgt != mors[second].src) return -1;
    std::string w = mors[second].word + mors[first].word;
    for (std::size_t i = 0; i < mors.size(); ++i)
      if (mors[i].word == w && mors[i].src == mors[first].src && mors[i].tgt == mors[second].tgt)
        return static_cast<int>(i);
    return -2;  // would leave the category (cannot happen for the 2-path)
  }
};

// --- relations as explicit pair sets ----------------------------------------

using Rel = std::set<std::pair<int, int>>;

inline Rel rel_compose(const Rel& r, const Rel& s) {
  Rel out;
  for (auto& [x, y] : r)
    for (auto& [y2, z] : s)
      if (y == y2) out.insert({x, z});
  return out;
}

inline Rel rel_of_bits(std::uint32_t bits, int a, int b) {
  Rel out;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      if (bits & (1u << (x * b + y))) out.insert({x, y});
  return out;
}

// A square of the relation double category exists iff every related pair maps
// into the bottom relation.
inline bool rel_square(const std::vector<int>& f, const std::vector<int>& g, const Rel& top,
                       const Rel& bottom) {
  for (auto& [x, y] : top)
    if (!bottom.count({f[x], g[y]})) return false;
  return true;
}

// --- span squares by pointwise commutation ----------------------------------

struct Span {
  std::vector<int> l, r;  // legs out of the apex
};

inline bool span_square(const std::vector<int>& f, const std::vector<int>& g, const Span& top,
                        const Span& bottom, const std::vector<int>& m) {
  if (m.size() != top.l.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= static_cast<int>(bottom.l.size())) return false;
    if (bottom.l[m[i]] != f[top.l[i]] || bottom.r[m[i]] != g[top.r[i]]) return false;
  }
  return true;
}

// --- functions helpers -------------------------------------------------------

inline std::vector<std::vector<int>> functions(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a, 0);
  int total = 1;
  for (int i = 0; i < a; ++i) total *= b;
  for (int i = 0; i < total; ++i) {
    out.push_back(f);
    for (int j = 0; j < a; ++j) {
      if (++f[j] < b) break;
      f[j] = 0;
    }
  }
  return out;
}

inline bool injective(const std::vector<int>& f) {
  std::set<int> seen(f.begin(), f.end());
  return seen.size() == f.size();
}

inline bool surjective(const std::vector<int>& f, int cod) {
  std::set<int> seen(f.begin(), f.end());
  return static_cast<int>(seen.size()) == cod;
}

// --- generic equivalence closure for the crossed-product quotient -----------

// Union-find over arbitrary keys; used to re-derive triple classes from the
// one-step relation independently of the library's builder.
struct UnionFind {
  std::map<std::string, std::string> parent;
  std::string find(std::string x) {
    while (true) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      x = it->second;
    }
  }
  void join(const std::string& a, const std::string& b) {
    auto ra = find(a), rb = find(b);
    parent[ra] = rb;
    if (!parent.count(a)) parent[a] = rb;
    if (!parent.count(b)) parent[b] = rb;
  }
  void add(const std::string& a) {
    if (!parent.count(a)) parent[a] = a;
  }
};

}  // namespace oracle
