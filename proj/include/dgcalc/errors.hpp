#pragma once
#include <stdexcept>
#include <string>

namespace dgcalc {

/* Structural misuse: mismatched fields or shapes, unknown labels, malformed data. */
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A degree outside the tabulated window was touched; never silently return zero. */
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* An operation's stated precondition does not hold for the given input. */
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A word cap was exceeded in a regime that promised a complete tabulation. */
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Instance file rejected; message carries line/column position. */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace dgcalc
