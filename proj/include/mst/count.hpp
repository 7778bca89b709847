#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace mst {

// Cardinality of an identity or membership type. These grow factorially
// (aut of an n-fold repetition contains an n! factor), so counts are
// arbitrary-precision.
using Count = boost::multiprecision::cpp_int;

// Size of a finite type in the universe; index sets and family weights.
using Cardinality = std::size_t;

inline Count factorial(std::size_t n) {
  Count r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

// base^e by repeated squaring; exponents stay small, bases do not.
inline Count pow_count(const Count& base, std::size_t e) {
  Count r = 1;
  Count b = base;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace mst
