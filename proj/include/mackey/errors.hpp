#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// Malformed or inconsistent input data (bad Cayley table, not a subgroup, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// File or JSON parse problems.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap was exceeded (group order, search bound, ...).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A pair (r, q) that no finite group can produce.
class NotRealizable : public ValidationError {
 public:
  explicit NotRealizable(const std::string& what) : ValidationError(what) {}
};

}  // namespace mackey
