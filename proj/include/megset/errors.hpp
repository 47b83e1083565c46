#pragma once

#include <stdexcept>

namespace meg {

// Base class for every error the library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance text, or an edge list violating the simple-graph rules
// (out-of-range id, self-loop, duplicate edge).
struct parse_error : error {
  using error::error;
};

// A semantic precondition violation: disconnected input where connectivity is
// required, unreachable pair, mismatched interval model, bad parameters.
struct invalid_input : error {
  using error::error;
};

// An instance exceeded a size guard of one of the exponential-time solvers.
struct guard_error : error {
  using error::error;
};

}  // namespace meg
