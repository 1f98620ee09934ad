#pragma once

#include <stdexcept>

namespace rclab {

// Violated API precondition (argument out of its documented domain).
// The CLI maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A brute-force search space exceeds the caller-supplied cap.
class CapExceededError : public PreconditionError {
  using PreconditionError::PreconditionError;
};

// Malformed textual input (complex files, group spec strings).
// The CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Las Vegas search exhausted its retry budget. Distinct from
// PreconditionError so callers can tell bad luck from misuse.
class RetriesExhaustedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rclab
