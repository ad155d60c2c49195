#pragma once

#include <stdexcept>
#include <string>

namespace krammer {

struct UnsupportedType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter value sits in the exceptional set of the statement being checked
// (collided eigenvalues, vanishing denominators, m = 1 projector, ...).
struct DegenerateParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pole of an explicit construction (w-vectors at m in {0,3}, branch bases at
// the excluded m values).
struct PoleParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators of differing shape or modulus fed to one closure.
struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegerRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subspace claimed stable under an operator is not.
struct StabilityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rank deficiencies of the claimed eigenvalues fail to exhaust the space.
struct SpectrumEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoCommutingPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace krammer
