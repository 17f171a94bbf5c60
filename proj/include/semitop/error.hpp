#pragma once

#include <stdexcept>
#include <string>

namespace semitop {

// Thrown for malformed inputs and violated operation preconditions.
// The CLI maps it to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace semitop
