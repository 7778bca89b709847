#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "mst/count.hpp"
#include "mst/errors.hpp"
#include "mst/interner.hpp"
#include "mst/mset.hpp"

namespace mst {

// Decides =_M: a bijection of child indices exists with matched children
// =_M-equal. Realized as equality of canonical forms.
inline bool eq_decide(const Mset& x, const Mset& y) { return canon(x) == canon(y); }

// Exact cardinality of x =_M y, by the class-factorized closed form: 0 when
// the child class histograms differ, else the product over classes of
// m! * aut^m — which is exactly the aut precomputed for the shared class.
inline Count count_eq(const Mset& x, const Mset& y) {
  const CanonId cx = canon(x);
  const CanonId cy = canon(y);
  if (cx != cy) return 0;
  return aut_of(cx);
}

// |x =_M x|: the automorphism count of the class of x.
inline Count aut(const Mset& x) { return aut_of(canon(x)); }

namespace detail {

// Permanent of the pairwise-count matrix by explicit enumeration of all
// bijections. Independent of the interner and of count_eq; the recursion is
// purely structural on the raw trees.
inline Count count_eq_bruteforce(const Mset& x, const Mset& y,
                                 std::size_t breadth_bound) {
  const std::size_t n = x.bar();
  if (n != y.bar()) return 0;
  if (n > breadth_bound || y.bar() > breadth_bound) {
    throw BoundExceeded("count_eq_oracle: node breadth " + std::to_string(n) +
                        " exceeds brute-force bound " +
                        std::to_string(breadth_bound));
  }
  if (n == 0) return 1;  // the unique empty bijection

  std::vector<std::vector<Count>> a(n, std::vector<Count>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = count_eq_bruteforce(x.tilde(i), y.tilde(j), breadth_bound);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Count total = 0;
  do {
    Count term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace detail

// Brute-force verifier for count_eq. Throws BoundExceeded when any compared
// node is broader than `breadth_bound` (a skip signal, not a failure).
inline Count count_eq_oracle(const Mset& x, const Mset& y,
                             std::size_t breadth_bound = 8) {
  return detail::count_eq_bruteforce(x, y, breadth_bound);
}

// Occurrence count of the class z among children of x: multiplicity times
// aut(z).
inline Count count_mem_class(CanonId z, const Mset& x) {
  std::size_t m = 0;
  for (const Mset& c : x.children())
    if (canon(c) == z) ++m;
  if (m == 0) return 0;
  return Count(m) * aut_of(z);
}

// Exact cardinality of z ∈ x: the sum over children x_i of |z =_M x_i|.
inline Count count_mem(const Mset& z, const Mset& x) {
  return count_mem_class(canon(z), x);
}

namespace detail {

struct AczelCache {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> table;
};

inline AczelCache& aczel_cache() {
  static AczelCache cache;
  return cache;
}

inline bool aczel_eq_ids(CanonId a, CanonId b) {
  if (a == b) return true;
  const std::pair<std::uint32_t, std::uint32_t> key =
      std::minmax(a.id, b.id);  // the relation is symmetric
  {
    std::lock_guard<std::mutex> hold(aczel_cache().mu);
    if (auto it = aczel_cache().table.find(key); it != aczel_cache().table.end())
      return it->second;
  }
  const std::vector<CanonId> ka = interner().kids(a);
  const std::vector<CanonId> kb = interner().kids(b);
  auto all_covered = [](const std::vector<CanonId>& from,
                        const std::vector<CanonId>& to) {
    for (CanonId i : from) {
      bool found = false;
      for (CanonId j : to)
        if (aczel_eq_ids(i, j)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  const bool r = all_covered(ka, kb) && all_covered(kb, ka);
  std::lock_guard<std::mutex> hold(aczel_cache().mu);
  aczel_cache().table.emplace(key, r);
  return r;
}

}  // namespace detail

// Aczel's set equality =_V: mutual-inclusion bisimulation. Coarser than
// =_M; it erases multiplicities.
inline bool eq_aczel(const Mset& x, const Mset& y) {
  return detail::aczel_eq_ids(canon(x), canon(y));
}

// The canonical classes occurring among children of x and of y.
inline std::vector<CanonId> child_classes(const Mset& x, const Mset& y) {
  std::vector<CanonId> zs;
  for (const Mset& c : x.children()) zs.push_back(canon(c));
  for (const Mset& c : y.children()) zs.push_back(canon(c));
  std::sort(zs.begin(), zs.end(),
            [](CanonId a, CanonId b) { return a.id < b.id; });
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  return zs;
}

// Counted extensionality: occurrence counts agree for every z. Quantifying z
// over the child classes of both sides is complete, because count_mem
// vanishes for every class outside them.
inline bool ext_check(const Mset& x, const Mset& y) {
  for (CanonId z : child_classes(x, y))
    if (count_mem_class(z, x) != count_mem_class(z, y)) return false;
  return true;
}

}  // namespace mst
