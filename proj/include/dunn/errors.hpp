#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dunn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the formula parser, the condition DSL parser and the
/// argument-text parser. `offset` is the 0-based character position
/// in the offending input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Invalid logic specification: duplicate tokens, bad arity, condition
/// referring to a missing argument, unknown counterpart, ...
class SpecError : public Error {
public:
  using Error::Error;
};

/// Evaluation-time error: unbound variable, unknown connective symbol.
class EvalError : public Error {
public:
  using Error::Error;
};

}  // namespace dunn
