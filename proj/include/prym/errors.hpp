#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Error taxonomy. Suites map these to process exit codes:
//   UsageError -> 2, CapabilityError -> 3, everything else -> nonzero failure.

// Malformed or out-of-domain caller input (bad genus, zero class, bad word).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Input is syntactically fine but mathematically degenerate for the
// requested operation (singular denominator, non-unimodular pairing, ...).
struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// The request is sound but exceeds a deliberate size/enumeration budget.
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A curve/word configuration failed a realizability filter; callers may
// retry with the next candidate, so the message names the failed invariant.
struct ConfigurationError : std::runtime_error {
  explicit ConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant did not hold. Always a bug, never user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace prym
