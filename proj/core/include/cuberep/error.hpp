#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cuberep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when the input was a
/// single token rather than a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured resource cap was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, std::int64_t limit, std::int64_t actual)
      : Error(cap + " cap exceeded: limit " + std::to_string(limit) + ", got " +
              std::to_string(actual)),
        cap_(std::move(cap)),
        limit_(limit),
        actual_(actual) {}
  const std::string& cap() const noexcept { return cap_; }
  std::int64_t limit() const noexcept { return limit_; }
  std::int64_t actual() const noexcept { return actual_; }

 private:
  std::string cap_;
  std::int64_t limit_;
  std::int64_t actual_;
};

/// An operation was called with arguments outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace cuberep
