#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mst/count.hpp"
#include "mst/equality.hpp"
#include "mst/errors.hpp"
#include "mst/interner.hpp"
#include "mst/mset.hpp"

namespace mst {

// A U-small family P : M -> U, realized as a weight assignment on canonical
// classes. Keying on CanonId is what makes the family respect transport:
// =_M-equal arguments cannot be told apart.
class ClassFamily {
 public:
  ClassFamily() = default;

  void set(const Mset& representative, Cardinality weight) {
    weights_[canon(representative).id] = weight;
  }
  void set(CanonId cls, Cardinality weight) { weights_[cls.id] = weight; }

  bool defined(CanonId cls) const { return weights_.count(cls.id) != 0; }

  Cardinality at(CanonId cls) const {
    auto it = weights_.find(cls.id);
    if (it == weights_.end())
      throw ClassMissing("family undefined on a needed class");
    return it->second;
  }

  Cardinality at(const Mset& z) const { return at(canon(z)); }

 private:
  std::unordered_map<std::uint32_t, Cardinality> weights_;
};

// A family of multisets indexed by the children of a base multiset: the f
// extracted from a union-replacement hypothesis.
struct IndexedFamily {
  Mset base;
  std::vector<Mset> members;

  IndexedFamily(Mset base_in, std::vector<Mset> members_in)
      : base(std::move(base_in)), members(std::move(members_in)) {
    if (members.size() != base.bar())
      throw ArityError("indexed family: " + std::to_string(members.size()) +
                       " members for a base with " +
                       std::to_string(base.bar()) + " children");
  }
};

// Restricted separation: each child of x occurs in the result with its
// occurrence weight multiplied by P at its class.
inline Mset sep(const ClassFamily& P, const Mset& x) {
  std::vector<Mset> kids;
  for (const Mset& c : x.children()) {
    const Cardinality w = P.at(c);
    for (Cardinality k = 0; k < w; ++k) kids.push_back(c);
  }
  return Mset(std::move(kids));
}

// Union-replacement: concatenates the children of all members. Satisfies
// count_mem(y, result) = sum_i count_mem(y, members[i]).
inline Mset union_rep(const IndexedFamily& fam) {
  std::vector<Mset> kids;
  for (const Mset& m : fam.members)
    for (const Mset& c : m.children()) kids.push_back(c);
  return Mset(std::move(kids));
}

// Binary union: the two-element instance of union_rep.
inline Mset union_of(const Mset& x, const Mset& y) {
  std::vector<Mset> kids;
  kids.reserve(x.bar() + y.bar());
  for (const Mset& c : x.children()) kids.push_back(c);
  for (const Mset& c : y.children()) kids.push_back(c);
  return Mset(std::move(kids));
}

inline Mset sing(const Mset& a) { return sup({a}); }

inline Mset pair(const Mset& a, const Mset& b) { return sup({a, b}); }

// Ordered pair, Wiener encoding {{{a},0},{{b}}}: the one whose identity count
// factorizes as count_eq(a,a') * count_eq(b,b').
inline Mset opair(const Mset& a, const Mset& b) {
  return pair(pair(sing(a), Mset()), sing(sing(b)));
}

// Kuratowski encoding {{a},{a,b}}. Kept as the contrast case: its identity
// count picks up the pair's self-symmetry (2 instead of 1 at a = b = 0).
inline Mset kpair(const Mset& a, const Mset& b) {
  return pair(sing(a), pair(a, b));
}

// Cartesian product: union_rep over a of union_rep over b of the singleton of
// the ordered pair. count_mem(opair(x,y), product(a,b)) =
// count_mem(x,a) * count_mem(y,b).
inline Mset product(const Mset& a, const Mset& b) {
  std::vector<Mset> rows;
  rows.reserve(a.bar());
  for (const Mset& ai : a.children()) {
    std::vector<Mset> cells;
    cells.reserve(b.bar());
    for (const Mset& bj : b.children()) cells.push_back(sing(opair(ai, bj)));
    rows.push_back(union_rep(IndexedFamily(b, std::move(cells))));
  }
  return union_rep(IndexedFamily(a, std::move(rows)));
}

// The graph of an index map g from children of a to children of b: the
// multiset of pairs <a~i, b~(g i)>.
inline Mset graph_of(const Mset& a, const Mset& b,
                     const std::vector<std::size_t>& g) {
  if (g.size() != a.bar())
    throw ArityError("graph_of: map has " + std::to_string(g.size()) +
                     " entries for a domain with " + std::to_string(a.bar()) +
                     " children");
  std::vector<Mset> kids;
  kids.reserve(a.bar());
  for (std::size_t i = 0; i < a.bar(); ++i) {
    if (g[i] >= b.bar())
      throw ArityError("graph_of: index " + std::to_string(g[i]) +
                       " out of range for a codomain with " +
                       std::to_string(b.bar()) + " children");
    kids.push_back(opair(a.tilde(i), b.tilde(g[i])));
  }
  return Mset(std::move(kids));
}

// Exponential: children are the graphs of all bar(b)^bar(a) index maps, in
// lexicographic map order. Guarded: sizes past max_children are refused.
inline Mset exp(const Mset& a, const Mset& b, std::size_t max_children = 4096) {
  const std::size_t n = a.bar();
  const std::size_t m = b.bar();
  if (m == 0 && n > 0) return Mset();  // no maps into the empty type

  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > max_children / (m == 0 ? 1 : m))
      throw BoundExceeded("exp: " + std::to_string(m) + "^" +
                          std::to_string(n) + " graphs exceed bound " +
                          std::to_string(max_children));
    total *= m;
  }
  if (total > max_children)
    throw BoundExceeded("exp: size exceeds bound " +
                        std::to_string(max_children));

  std::vector<Mset> graphs;
  graphs.reserve(total);
  std::vector<std::size_t> g(n, 0);
  for (std::size_t made = 0; made < total; ++made) {
    graphs.push_back(graph_of(a, b, g));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++g[pos] < m) break;
      g[pos] = 0;
    }
  }
  return Mset(std::move(graphs));
}

// The von Neumann naturals: N 0 = 0, N(n+1) = N n ∪ {N n}. These are sets:
// every occurrence count is 0 or 1.
inline Mset nat(std::size_t n) {
  Mset cur;
  for (std::size_t k = 0; k < n; ++k) cur = union_of(cur, sing(cur));
  return cur;
}

// The embedding of a finite cardinality: n children, all empty. Reflects
// |n ~ m|: its self-identity count is n!.
inline Mset iota(Cardinality n) {
  return Mset(std::vector<Mset>(n, Mset()));
}

}  // namespace mst
