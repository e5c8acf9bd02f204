#ifndef QSA_ERRORS_HPP_
#define QSA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsa {

/// Invalid argument to a generator, constructor or analysis routine.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input that is well formed but degenerate for the requested operation
/// (e.g. an isolated vertex when building a random walk).
struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Two objects that must agree (dimensions, measurement times, graphs) do not.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Norm drift of a walk state beyond the tolerated bound.
struct NumericalStabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegressionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qsa

#endif
