#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbqc {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Raised when an operation meets a measurement label outside its fragment. */
class UnsupportedLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/** Malformed input document; line and column are 1-based, 0 when unknown. */
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(
      const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace mbqc
