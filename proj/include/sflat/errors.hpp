#pragma once

#include <stdexcept>
#include <string>

namespace sflat {

// Raised when the Lemma-2 case split falls through: integer mass equal to
// the simplex dimension, all non-base coefficients below 1, their sum above
// mass - 1. Impossible for an empty simplex, so reaching it doubles as a
// runtime emptiness assertion (and signals a triangulation bug upstream).
class EmptinessViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A queried point is not in the stated dilate of the polytope.
class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ambient dimensions of operands disagree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable or malformed polytope file.
class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sflat
