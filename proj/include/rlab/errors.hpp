#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Input failed metric or structural validation. The CLI maps this (and
// std::invalid_argument) to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator or search refused an input exceeding its size cap. Exit code 3.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Theta-class extraction found a class whose edge set does not split the
// graph into exactly two half-spaces.
struct NotCubicalError : ValidationError {
  int class_index;
  NotCubicalError(int cls, const std::string& what)
      : ValidationError(what), class_index(cls) {}
};

// gns_embed rejected a kernel whose Gram matrix has an eigenvalue below -tol.
struct NotNegativeTypeError : ValidationError {
  double offending_eigenvalue;
  NotNegativeTypeError(double eig, const std::string& what)
      : ValidationError(what), offending_eigenvalue(eig) {}
};

}  // namespace rlab
