#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// Problems with the input itself: unreadable files, malformed edge lists,
// unknown fixture names, arrays outside the supported domain. The CLI maps
// these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownFixtureError : public InputError {
 public:
  explicit UnknownFixtureError(const std::string& name)
      : InputError("unknown fixture: " + name) {}
};

class InvalidArrayError : public InputError {
 public:
  using InputError::InputError;
};

// Violated mathematical invariants: inconsistent oracles, failed projector
// laws, Krein symmetry/negativity breaches. The CLI maps these to exit code 1.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDistanceRegularError : public MathError {
 public:
  NotDistanceRegularError(int x, int y, int h, int i, int j)
      : MathError("graph is not distance-regular: pair (" + std::to_string(x) +
                  "," + std::to_string(y) + ") at distance " +
                  std::to_string(h) + " disagrees on intersection count (i=" +
                  std::to_string(i) + ", j=" + std::to_string(j) + ")"),
        x(x), y(y), h(h), i(i), j(j) {}

  int x, y, h, i, j;
};

class SpectralError : public MathError {
 public:
  using MathError::MathError;
};

class KreinViolationError : public MathError {
 public:
  using MathError::MathError;
};

class MissingWitnessError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace drg
