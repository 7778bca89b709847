#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "mst/interner.hpp"
#include "mst/mset.hpp"

namespace mst {

namespace detail {

// All non-decreasing index tuples of length k over [0, n): each is the sorted
// child sequence of one canonical multiset over the level elements.
inline void for_each_multicombination(
    std::size_t n, std::size_t k,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k, 0);
  if (k == 0) {
    visit(idx);
    return;
  }
  if (n == 0) return;
  for (;;) {
    visit(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < k; ++i) idx[i] = v;
  }
}

}  // namespace detail

// Every canonical multiset of rank <= max_rank whose nodes all have
// <= max_breadth children, each class exactly once, sorted by the structural
// total order. Deterministic; the output is closed under taking children.
inline std::vector<Mset> enumerate(std::size_t max_rank,
                                   std::size_t max_breadth) {
  std::vector<CanonId> level{interner().intern_children({})};
  for (std::size_t r = 0; r < max_rank; ++r) {
    std::vector<CanonId> next;
    for (std::size_t k = 0; k <= max_breadth; ++k) {
      detail::for_each_multicombination(
          level.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<CanonId> kids;
            kids.reserve(k);
            for (std::size_t i : idx) kids.push_back(level[i]);
            next.push_back(interner().intern_children(std::move(kids)));
          });
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](CanonId a, CanonId b) { return canon_less(a, b); });
  std::vector<Mset> out;
  out.reserve(level.size());
  for (CanonId c : level) out.push_back(from_canon(c));
  return out;
}

}  // namespace mst
