#pragma once

#include <stdexcept>

namespace spexlab {

// Search-space guard tripped; distinct from bad arguments so callers can map
// it to its own exit code.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spexlab
