#pragma once

#include <stdexcept>
#include <string>

namespace movlab {

// Malformed inputs: bad matrices, bad files, bad parameters.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A size or search guard was exceeded before an answer was determined.
// Distinct from ValidationError so callers can decide to raise the guard.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace movlab
