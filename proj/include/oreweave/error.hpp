#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oreweave {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a type invariant (bad URI, literal in subject position...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Syntax error in a serialized document. Line and column are 1-based; zero
// means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t byte_offset);

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// A syntactically valid document does not describe a well-formed Resource Map.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A second Resource Map claims an aggregation that already has one.
class ConflictError : public Error {
 public:
  using Error::Error;
};

}  // namespace oreweave
