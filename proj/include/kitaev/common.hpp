#pragma once

#include <stdexcept>
#include <string>

namespace kitaev {

// Error type for all validation and invariant failures.  The CLI maps these
// to exit code 2 (input errors) or 1 (verification failures) at the top level.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

}  // namespace kitaev
