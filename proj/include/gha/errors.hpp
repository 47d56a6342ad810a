#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gha {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (wrong field, deg f out of range,
/// element outside H_0, inversion of zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would produce a polynomial above the configured degree cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries the byte offset of the offending token and
/// the set of tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t offset, std::vector<std::string> expected)
      : Error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace gha
