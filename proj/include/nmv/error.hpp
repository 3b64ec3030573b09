#pragma once

#include <stdexcept>
#include <string>

namespace nmv {

/// Malformed or inconsistent user input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold, e.g. a positive-dimensional
/// base locus or a rank-deficient camera (exit code 3).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert-function sampling did not stabilize on the chosen grids (exit
/// code 4).
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity violated an invariant that must hold for correct
/// code, e.g. a non-integral mixed volume (exit code 1).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nmv
