#pragma once

#include <stdexcept>
#include <string>

namespace gamedyn {

// Thrown when a caller passes a non-finite or otherwise malformed value.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a documented precondition (range, index, ordering) is violated.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gamedyn
