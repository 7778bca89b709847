#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "mst/count.hpp"
#include "mst/errors.hpp"

namespace mst {

// A function between finite index sets: f : A -> C with |A| = values.size()
// and every value < codomain_size.
struct FinMap {
  std::size_t codomain_size = 0;
  std::vector<std::size_t> values;

  FinMap(std::size_t codomain, std::vector<std::size_t> vals)
      : codomain_size(codomain), values(std::move(vals)) {
    for (std::size_t v : values)
      if (v >= codomain_size)
        throw ArityError("finite map: value " + std::to_string(v) +
                         " outside codomain of size " +
                         std::to_string(codomain_size));
  }

  std::size_t domain_size() const { return values.size(); }
  std::size_t operator()(std::size_t a) const { return values[a]; }
};

// All a with f(a) = c.
inline std::vector<std::size_t> fiber(const FinMap& f, std::size_t c) {
  if (c >= f.codomain_size)
    throw ArityError("fiber: index " + std::to_string(c) +
                     " outside codomain of size " +
                     std::to_string(f.codomain_size));
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < f.domain_size(); ++a)
    if (f(a) == c) out.push_back(a);
  return out;
}

namespace detail {

inline void require_shared_codomain(const FinMap& f, const FinMap& g) {
  if (f.codomain_size != g.codomain_size)
    throw ArityError("codomain mismatch: " + std::to_string(f.codomain_size) +
                     " vs " + std::to_string(g.codomain_size));
}

}  // namespace detail

// |{alpha : A -> B with g∘alpha = f}|, closed form: each alpha(a) ranges over
// the fiber of g at f(a) independently.
inline Count count_sigma_maps(const FinMap& f, const FinMap& g) {
  detail::require_shared_codomain(f, g);
  Count total = 1;
  for (std::size_t a = 0; a < f.domain_size(); ++a) {
    total *= Count(fiber(g, f(a)).size());
    if (total == 0) break;
  }
  return total;
}

// |{alpha : A ≃ B with g∘alpha = f}|, closed form: a bijection must match
// each fiber of f onto the same-size fiber of g, in |fiber|! ways.
inline Count count_sigma_equivs(const FinMap& f, const FinMap& g) {
  detail::require_shared_codomain(f, g);
  Count total = 1;
  for (std::size_t c = 0; c < f.codomain_size; ++c) {
    const std::size_t nf = fiber(f, c).size();
    const std::size_t ng = fiber(g, c).size();
    if (nf != ng) return 0;
    total *= factorial(nf);
  }
  return total;
}

// Brute-force counterparts: explicit enumeration of all maps / bijections.
// Independent verification paths for the two closed forms.
inline Count count_sigma_maps_bruteforce(const FinMap& f, const FinMap& g) {
  detail::require_shared_codomain(f, g);
  const std::size_t n = f.domain_size();
  const std::size_t m = g.domain_size();
  if (n == 0) return 1;
  if (m == 0) return 0;
  Count total = 0;
  std::vector<std::size_t> alpha(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g(alpha[a]) == f(a);
    if (ok) ++total;
    std::size_t pos = n;
    while (pos > 0 && alpha[pos - 1] == m - 1) --pos;
    if (pos == 0) break;
    ++alpha[pos - 1];
    for (std::size_t i = pos; i < n; ++i) alpha[i] = 0;
  }
  return total;
}

inline Count count_sigma_equivs_bruteforce(const FinMap& f, const FinMap& g) {
  detail::require_shared_codomain(f, g);
  const std::size_t n = f.domain_size();
  if (n != g.domain_size()) return 0;
  if (n == 0) return 1;
  std::vector<std::size_t> alpha(n);
  std::iota(alpha.begin(), alpha.end(), std::size_t{0});
  Count total = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g(alpha[a]) == f(a);
    if (ok) ++total;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return total;
}

}  // namespace mst
