#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mst/errors.hpp"
#include "mst/interner.hpp"
#include "mst/mset.hpp"

namespace mst {

namespace detail {

inline void print_canon(CanonId c, std::string& out) {
  if (c.arity == 0) {
    out += '0';
    return;
  }
  out += '{';
  bool first = true;
  for (CanonId k : interner().kids(c)) {
    if (!first) out += ',';
    first = false;
    print_canon(k, out);
  }
  out += '}';
}

}  // namespace detail

// Canonical text form: `0` for the empty multiset, `{e1,e2,...}` with children
// in canonical order. This is the persistence format and round-trips
// bit-exactly through parse_mset.
inline std::string to_text(const Mset& x) {
  std::string out;
  detail::print_canon(canon(x), out);
  return out;
}

inline std::string to_text(CanonId c) {
  std::string out;
  detail::print_canon(c, out);
  return out;
}

namespace detail {

inline bool starts_empty_symbol(const std::string& s, std::size_t i) {
  // UTF-8 for the empty-set sign, accepted on input only.
  return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
         static_cast<unsigned char>(s[i + 1]) == 0x88 &&
         static_cast<unsigned char>(s[i + 2]) == 0x85;
}

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline Mset parse_mset_at(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size())
    throw ParseError(i, "unexpected end of input", "'0', '{' or '∅'");
  if (s[i] == '0') {
    ++i;
    return Mset();
  }
  if (starts_empty_symbol(s, i)) {
    i += 3;
    return Mset();
  }
  if (s[i] != '{')
    throw ParseError(i, std::string("unexpected '") + s[i] + "'",
                     "'0', '{' or '∅'");
  ++i;
  std::vector<Mset> kids;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '}') {
    ++i;
    return Mset();  // `{}` is accepted for the empty multiset
  }
  for (;;) {
    kids.push_back(parse_mset_at(s, i));
    skip_ws(s, i);
    if (i >= s.size())
      throw ParseError(i, "unterminated multiset literal", "',' or '}'");
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] == '}') {
      ++i;
      break;
    }
    throw ParseError(i, std::string("unexpected '") + s[i] + "'", "',' or '}'");
  }
  return Mset(std::move(kids));
}

}  // namespace detail

// Strict parser for the persistence format (multiset literals only; the query
// DSL lives in parser.hpp).
inline Mset parse_mset(const std::string& s) {
  std::size_t i = 0;
  Mset m = detail::parse_mset_at(s, i);
  detail::skip_ws(s, i);
  if (i != s.size())
    throw ParseError(i, "trailing input after multiset literal", "end of input");
  return m;
}

}  // namespace mst
