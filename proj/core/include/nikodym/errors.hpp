#pragma once

#include <stdexcept>
#include <string>

namespace nikodym {

/// Malformed geometric input (degenerate halfplane, non-convex chain, bad literal).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside its documented range (even n, epsilon not in (0, 1/2), ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A premise of the exact measure computation was found false at runtime.
/// Raised, for instance, when two members of the same slope family overlap
/// with positive area, which would invalidate the truncated inclusion-exclusion.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nikodym
