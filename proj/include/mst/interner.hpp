#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mst/count.hpp"
#include "mst/mset.hpp"

namespace mst {

// Interned identifier of a canonical form. Two multisets are =_M-equal iff
// their CanonIds coincide. arity and rank ride along so the structural order
// can compare without a table lookup in the common case.
struct CanonId {
  std::uint32_t id = 0;
  std::uint32_t arity = 0;
  std::uint32_t rank = 0;

  friend bool operator==(CanonId a, CanonId b) { return a.id == b.id; }
  friend bool operator!=(CanonId a, CanonId b) { return a.id != b.id; }
};

struct CanonIdHash {
  std::size_t operator()(CanonId c) const noexcept { return c.id; }
};

// Hash-consing table of canonical forms. An entry holds its children as a
// sequence of CanonIds sorted by the structural order, plus the automorphism
// count of the class, computed once at intern time.
//
// ids are issued in first-seen order; all ordering goes through less(), which
// compares structure only (arity first, then the sorted child sequences,
// recursively), so results are independent of issuance history.
//
// Public methods serialize on one mutex. Everything else in the library is a
// pure function over immutable values.
class Interner {
 public:
  // Interns the class whose children are `kids` (in any order). Sorts a copy
  // by the structural order, so callers need not pre-sort.
  CanonId intern_children(std::vector<CanonId> kids) {
    std::lock_guard<std::mutex> hold(mu_);
    std::sort(kids.begin(), kids.end(),
              [this](CanonId a, CanonId b) { return less_nolock(a, b); });
    std::vector<std::uint32_t> key;
    key.reserve(kids.size());
    for (CanonId k : kids) key.push_back(k.id);
    if (auto it = index_.find(key); it != index_.end()) return make_id(it->second);

    Entry e;
    e.rank = 0;
    for (CanonId k : kids) e.rank = std::max(e.rank, k.rank + 1);
    e.aut = 1;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j].id == kids[i].id) ++j;
      const std::size_t m = j - i;
      e.aut *= factorial(m) * pow_count(entries_[kids[i].id].aut, m);
      i = j;
    }
    e.kids = std::move(kids);

    const auto id = static_cast<std::uint32_t>(entries_.size());
    entries_.push_back(std::move(e));
    index_.emplace(std::move(key), id);
    return make_id(id);
  }

  // Strict total order on canonical forms; refines =_M-inequality.
  bool less(CanonId a, CanonId b) const {
    std::lock_guard<std::mutex> hold(mu_);
    return less_nolock(a, b);
  }

  std::vector<CanonId> kids(CanonId c) const {
    std::lock_guard<std::mutex> hold(mu_);
    return entries_[c.id].kids;
  }

  // |x =_M x| for the class: product over child classes of m! * aut^m.
  Count aut(CanonId c) const {
    std::lock_guard<std::mutex> hold(mu_);
    return entries_[c.id].aut;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> hold(mu_);
    return entries_.size();
  }

 private:
  struct Entry {
    std::vector<CanonId> kids;  // sorted by the structural order
    std::uint32_t rank = 0;
    Count aut;
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (std::uint32_t x : v) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  CanonId make_id(std::uint32_t id) const {
    const Entry& e = entries_[id];
    return CanonId{id, static_cast<std::uint32_t>(e.kids.size()), e.rank};
  }

  bool less_nolock(CanonId a, CanonId b) const {
    if (a.id == b.id) return false;
    if (a.arity != b.arity) return a.arity < b.arity;
    const std::vector<CanonId>& ka = entries_[a.id].kids;
    const std::vector<CanonId>& kb = entries_[b.id].kids;
    for (std::size_t i = 0; i < ka.size(); ++i) {
      if (ka[i].id != kb[i].id) return less_nolock(ka[i], kb[i]);
    }
    return false;  // identical sorted children would have been the same entry
  }

  mutable std::mutex mu_;
  std::deque<Entry> entries_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> index_;
};

inline Interner& interner() {
  static Interner table;
  return table;
}

// Recursive canonicalization: canonicalize children, sort, intern. Idempotent
// and invariant under permuting children.
inline CanonId canon(const Mset& x) {
  std::vector<CanonId> kids;
  kids.reserve(x.bar());
  for (const Mset& c : x.children()) kids.push_back(canon(c));
  return interner().intern_children(std::move(kids));
}

// Rebuilds the canonical representative tree: children in canonical order.
inline Mset from_canon(CanonId c) {
  std::vector<Mset> kids;
  for (CanonId k : interner().kids(c)) kids.push_back(from_canon(k));
  return Mset(std::move(kids));
}

inline bool canon_less(CanonId a, CanonId b) { return interner().less(a, b); }

inline Count aut_of(CanonId c) { return interner().aut(c); }

}  // namespace mst
