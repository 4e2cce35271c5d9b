#pragma once

#include <stdexcept>
#include <string>

namespace hgrig {

/// Bad user input: parameters, flags, malformed words or JSON.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The finite ball is too small to decide the requested statement.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (vertices, cells, cycles) was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency failure: signals a bug, never valid output.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hgrig
