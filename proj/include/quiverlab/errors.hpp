#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

/// Malformed input: bad algebra file, unknown vertex, non-parallel relation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relation completion or basis enumeration exceeded the word-length cap.
class NotFiniteDimensional : public InputError {
 public:
  using InputError::InputError;
};

/// A checker or operation was called outside its hypotheses.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quiverlab
