#pragma once
#include <stdexcept>
#include <string>

namespace gorhom {

// Error taxonomy mirrors the exit-code contract of the CLI:
// bad input data (exit 2) vs. a computation/check that ran and failed (exit 1).
struct Error : std::runtime_error {
  enum class Kind { Input, Parse, Check, Internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error input_error(const std::string& msg) { return Error(Error::Kind::Input, msg); }
inline Error check_error(const std::string& msg) { return Error(Error::Kind::Check, msg); }
inline Error internal_error(const std::string& msg) { return Error(Error::Kind::Internal, msg); }

// Parse failures carry a character offset into the offending expression.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : Error(Error::Kind::Parse, msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

}  // namespace gorhom
