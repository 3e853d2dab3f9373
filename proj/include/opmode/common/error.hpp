#pragma once

#include <stdexcept>
#include <string>

namespace opmode {

// Bad input data or configuration. The CLI maps this to exit status 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stage was invoked before the stage that produces its inputs.
class PrerequisiteError : public ValidationError {
 public:
  PrerequisiteError(const std::string& what, std::string run_first)
      : ValidationError(what + " (run `opmode " + run_first + "` first)"),
        run_first_(std::move(run_first)) {}

  const std::string& run_first() const noexcept { return run_first_; }

 private:
  std::string run_first_;
};

// Failure while a stage was running (gridlock, divergence, I/O). Exit status 2.
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opmode
