#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace mst {

// A hereditarily finite multiset: a node with a finite, ordered sequence of
// child multisets. The sequence order is representation-only; every semantic
// operation downstream is invariant under permuting children. Values are
// immutable and freely shareable across threads (children are held behind a
// shared const node).
class Mset {
 public:
  // The empty multiset.
  Mset() = default;

  explicit Mset(std::vector<Mset> children) {
    if (children.empty()) return;
    std::size_t r = 0;
    for (const Mset& c : children) r = std::max(r, c.rank());
    node_ = std::make_shared<const Node>(Node{std::move(children), r + 1});
  }

  // Child count: the index code of the node.
  std::size_t bar() const { return node_ ? node_->kids.size() : 0; }

  // Child lookup. i must be < bar().
  const Mset& tilde(std::size_t i) const { return node_->kids[i]; }

  const std::vector<Mset>& children() const {
    static const std::vector<Mset> none;
    return node_ ? node_->kids : none;
  }

  // Tree height; 0 for the empty multiset.
  std::size_t rank() const { return node_ ? node_->rank : 0; }

  // Total number of nodes, the root included.
  std::size_t size() const {
    std::size_t n = 1;
    for (const Mset& c : children()) n += c.size();
    return n;
  }

 private:
  struct Node {
    std::vector<Mset> kids;
    std::size_t rank;
  };
  std::shared_ptr<const Node> node_;  // null encodes the empty multiset
};

// The constructor of M: the node with the given children.
inline Mset sup(std::vector<Mset> children) { return Mset(std::move(children)); }

inline Mset empty() { return Mset(); }

}  // namespace mst
