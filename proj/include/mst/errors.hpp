#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mst {

// Stable error codes, surfaced verbatim by the CLI.
enum class ErrorCode { parse, unbound, arity, bound_exceeded, class_missing };

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse: return "PARSE";
    case ErrorCode::unbound: return "UNBOUND";
    case ErrorCode::arity: return "ARITY";
    case ErrorCode::bound_exceeded: return "BOUND-EXCEEDED";
    case ErrorCode::class_missing: return "CLASS-MISSING";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error with the byte offset of the offending token and the set of
// tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what, std::string expected)
      : Error(ErrorCode::parse, what),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class UnboundError : public Error {
 public:
  explicit UnboundError(const std::string& name)
      : Error(ErrorCode::unbound, "unbound variable '" + name + "'") {}
};

class ArityError : public Error {
 public:
  explicit ArityError(const std::string& what) : Error(ErrorCode::arity, what) {}
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what)
      : Error(ErrorCode::bound_exceeded, what) {}
};

class ClassMissing : public Error {
 public:
  explicit ClassMissing(const std::string& what)
      : Error(ErrorCode::class_missing, what) {}
};

}  // namespace mst
