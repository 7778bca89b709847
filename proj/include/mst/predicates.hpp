#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "mst/constructions.hpp"
#include "mst/equality.hpp"
#include "mst/interner.hpp"
#include "mst/mset.hpp"

namespace mst {

// Structural decoder for the Wiener encoding {{{a},0},{{b}}}. The two sides
// have arities 2 and 1, so the match is order-insensitive.
inline std::optional<std::pair<Mset, Mset>> decode_opair(const Mset& z) {
  if (z.bar() != 2) return std::nullopt;
  const Mset* marked = nullptr;  // {{a},0}
  const Mset* plain = nullptr;   // {{b}}
  for (const Mset& c : z.children()) {
    if (c.bar() == 2 && !marked)
      marked = &c;
    else if (c.bar() == 1 && !plain)
      plain = &c;
    else
      return std::nullopt;
  }
  if (!marked || !plain) return std::nullopt;

  const Mset* first_sing = nullptr;  // the {a} inside {{a},0}
  bool saw_empty = false;
  for (const Mset& c : marked->children()) {
    if (c.bar() == 1 && !first_sing)
      first_sing = &c;
    else if (c.bar() == 0 && !saw_empty)
      saw_empty = true;
    else
      return std::nullopt;
  }
  if (!first_sing || !saw_empty) return std::nullopt;

  const Mset& second_sing = plain->tilde(0);  // the {b} inside {{b}}
  if (second_sing.bar() != 1) return std::nullopt;

  return std::make_pair(first_sing->tilde(0), second_sing.tilde(0));
}

namespace detail {

inline std::optional<std::vector<std::pair<Mset, Mset>>> decode_graph(
    const Mset& z) {
  std::vector<std::pair<Mset, Mset>> pairs;
  pairs.reserve(z.bar());
  for (const Mset& c : z.children()) {
    auto p = decode_opair(c);
    if (!p) return std::nullopt;
    pairs.push_back(std::move(*p));
  }
  return pairs;
}

}  // namespace detail

// A multiset operation from a to b: every element of z is an ordered pair,
// the multiset of first components is =_M-equal to a, and every second
// component occurs in b.
inline bool is_operation(const Mset& a, const Mset& b, const Mset& z) {
  auto pairs = detail::decode_graph(z);
  if (!pairs) return false;
  std::vector<Mset> firsts;
  firsts.reserve(pairs->size());
  for (const auto& [x, y] : *pairs) firsts.push_back(x);
  if (!eq_decide(Mset(std::move(firsts)), a)) return false;
  for (const auto& [x, y] : *pairs)
    if (count_mem(y, b) == 0) return false;
  return true;
}

// A multiset function: an operation that sends equal occurrences to equal
// occurrences.
inline bool is_function(const Mset& a, const Mset& b, const Mset& z) {
  if (!is_operation(a, b, z)) return false;
  auto pairs = detail::decode_graph(z);
  std::vector<std::pair<CanonId, CanonId>> classed;
  classed.reserve(pairs->size());
  for (const auto& [x, y] : *pairs) classed.emplace_back(canon(x), canon(y));
  for (std::size_t i = 0; i < classed.size(); ++i)
    for (std::size_t j = i + 1; j < classed.size(); ++j)
      if (classed[i].first == classed[j].first &&
          classed[i].second != classed[j].second)
        return false;
  return true;
}

inline bool is_zero(const Mset& z) { return z.bar() == 0; }

// z is the successor of y: count_mem(x, z) = count_mem(x, y) + count_eq(x, y)
// for every x. The quantification runs over the child classes of both sides
// plus the class of y itself; all three terms vanish everywhere else.
inline bool is_successor(const Mset& y, const Mset& z) {
  const CanonId cy = canon(y);
  std::vector<CanonId> cls = child_classes(y, z);
  if (std::none_of(cls.begin(), cls.end(),
                   [&](CanonId c) { return c == cy; }))
    cls.push_back(cy);
  for (CanonId c : cls) {
    Count rhs = count_mem_class(c, y);
    if (c == cy) rhs += aut_of(cy);
    if (count_mem_class(c, z) != rhs) return false;
  }
  return true;
}

}  // namespace mst
