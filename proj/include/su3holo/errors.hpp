#pragma once

#include <stdexcept>
#include <string>

namespace su3holo {

/// Raised when an operation needs a simple spectrum (or a nonzero octet
/// vector) and the input sits on, or too close to, a degeneracy set.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A discrete loop whose consecutive eigenvector overlaps drop below the
/// resolution guard.
class UnderResolvedPath : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int lhs, int rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace su3holo
