#pragma once

#include <stdexcept>
#include <string>

namespace ncgeo {

enum class ErrorKind {
  DivisionByZero,
  PresentationMismatch,
  IndexError,
  NotSymmetric,
  NotStronglySigmaCompatible,
  NotInvertible,
  DerivationClosureViolated,
  WrongRank,
  PositivityNotCertified,
  NotARelation,
  UnsupportedBackend,
  ParseError,
  UnknownGenerator,
  InvalidConfig,
};

// Single exception type; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

const char* error_kind_name(ErrorKind kind);

}  // namespace ncgeo
