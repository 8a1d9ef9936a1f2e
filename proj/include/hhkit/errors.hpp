#pragma once

#include <stdexcept>
#include <string>

namespace hhkit {

// Bad user input: file syntax, dangling references, invalid options.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is valid but the computation cannot proceed: infinite-dimensional
// algebra, complex size cap exceeded.
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computation routes disagreed on a value they must share.
struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violated (a bug, not a user problem).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hhkit
