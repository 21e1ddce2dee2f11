#pragma once

#include <stdexcept>
#include <string>

namespace crumby {

/// Bad input: malformed files, violated preconditions, inconsistent hints.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive step produced something it should not have. These indicate
/// a bug (or a gap in the construction being executed), never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crumby
