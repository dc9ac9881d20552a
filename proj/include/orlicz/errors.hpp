#ifndef ORLICZ_ERRORS_HPP
#define ORLICZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orlicz {

// Argument outside the mathematical domain of an operation (t < 0, p <= 1, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation not available for this family (e.g. derivative of a custom
// evaluator that did not supply one).
struct UnsupportedOperation : std::logic_error {
  using std::logic_error::logic_error;
};

// Caller violated a documented precondition (test function with nonzero
// boundary values, ell <= 1/p1, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Iterative scheme failed to converge. Carries the best value found so far
// so diagnostics can report partial results.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what, double partial_value = 0.0)
      : std::runtime_error(what), partial(partial_value) {}
  double partial;
};

}  // namespace orlicz

#endif
