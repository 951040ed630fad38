#pragma once

#include <stdexcept>
#include <string>

namespace gexp {

/// Bad user input: unsupported family/rank, malformed weight, failed precondition.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Something that should be exact was not (non-exact division, negative
/// multiplicity while peeling). Always a bug or a wrong formula.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gexp
