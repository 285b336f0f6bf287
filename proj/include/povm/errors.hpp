#pragma once

#include <stdexcept>
#include <string>

namespace povm {

// Argument outside the mathematical domain of a function (eta, h, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Derivative requested at a point where it diverges (h' at t = -1).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An interval computation could not decide a sign; retry with more precision.
class AmbiguousSign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure did not converge or hit its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace povm
