#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace worldseq {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Well-formed input that is meaningless here: unknown constants, mismatched
/// vocabularies, invalid weights.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A conditional probability was requested given a zero-mass event.
class UndefinedConditionalError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

}  // namespace worldseq
