#ifndef BELLKIT_ERRORS_HPP_
#define BELLKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bellkit {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NegativeWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WeightsNotNormalized : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IdentityViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonRealAverage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProblem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidContext : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AngleMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace bellkit

#endif  // BELLKIT_ERRORS_HPP_
