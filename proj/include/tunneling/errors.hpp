#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace tunneling {

/// Raised when a caller breaks a documented precondition (bad index, region
/// mismatch, parameters outside the type invariants).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A square-root argument in the kinematics was not strictly positive. The
/// energy ratio or mass ratio sits outside the regime's validity window.
class NonPositiveRootArgument : public std::domain_error {
 public:
  NonPositiveRootArgument(std::string name, double value)
      : std::domain_error(describe(name, value)), name_(std::move(name)), value_(value) {}

  const std::string& name() const noexcept { return name_; }
  double value() const noexcept { return value_; }

 private:
  static std::string describe(const std::string& name, double value) {
    std::ostringstream os;
    os << "square-root argument '" << name << "' is not positive (" << value
       << "); parameters are outside the regime window";
    return os.str();
  }

  std::string name_;
  double value_;
};

/// The closed-form amplitudes cannot be evaluated (hyperbolic functions
/// overflow). Use the wide-barrier expressions instead.
class DegenerateMatching : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Barrier exponent q*a is above the finite-barrier guard.
class OverflowGuard : public std::overflow_error {
 public:
  explicit OverflowGuard(double qa)
      : std::overflow_error(describe(qa)), qa_(qa) {}
  double qa() const noexcept { return qa_; }

 private:
  static std::string describe(double qa) {
    std::ostringstream os;
    os << "barrier exponent q*a = " << qa
       << " exceeds the finite-barrier guard; use the wide-barrier formulas";
    return os.str();
  }
  double qa_;
};

/// A finite-difference stencil point left the admissible energy window.
class StencilOutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The assembled boundary-condition system is numerically singular.
class SingularMatching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tunneling
