#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset()` is the byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation that needs a connected graph received a disconnected one.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// Exact searches refuse inputs beyond their configured order cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Bad arguments: out-of-range vertices, non-positive sizes, diameter
/// preconditions, n beyond what a format supports.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace metdim
