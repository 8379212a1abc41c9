#pragma once

#include <stdexcept>
#include <string>

namespace splf {

// A computation would exceed a configured resource cap. The message names
// the cap so callers can raise it deliberately instead of by accident.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check between two independent computations of the same quantity
// failed. Always a bug or a corrupted input, never a tolerance issue.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numeric routine could not reach its requested tolerance.
class tolerance_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splf
