#pragma once

#include <stdexcept>
#include <string>

namespace hpzero {

// Bad user input: unknown surface tag, malformed rational, inhomogeneous
// custom equation, out-of-range parameter.  The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A per-weight matrix grew past the configured nonzero cap.  Carries enough
// context to report which slice blew up.  The CLI maps this to exit code 3.
struct CapExceeded : std::runtime_error {
  int weight;
  long long nonzeros;
  long long cap;
  CapExceeded(int w, long long nnz, long long cap_);
};

}  // namespace hpzero
