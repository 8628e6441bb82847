#pragma once

#include <stdexcept>
#include <string>

namespace lacost {

enum class ErrorKind {
  InvalidDimension,
  Partition,
  Coverage,
  Adjacency,
  DegenerateTally,
  Domain,
  InvalidProbability,
  Usage,
  Config,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind drives CLI exit codes and
// the Python exception mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lacost
