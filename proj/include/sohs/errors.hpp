#pragma once

#include <stdexcept>
#include <string>

namespace sohs {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveOnCircle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairingFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PivotNonpositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverStalled : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProjectionBrokePsd : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IterationCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sohs
