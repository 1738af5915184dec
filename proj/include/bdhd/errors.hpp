#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bdhd {

struct InvalidPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance file rejected; `field` is the JSON path of the offending value,
// e.g. "events[2].t".
struct ParseError : std::runtime_error {
  std::string field;
  ParseError(std::string field_, const std::string& msg)
      : std::runtime_error(field_ + ": " + msg), field(std::move(field_)) {}
};

// DP table would exceed the configured entry budget.
struct StateSpaceTooLarge : std::runtime_error {
  std::uint64_t entries_required;
  std::uint64_t entries_allowed;
  StateSpaceTooLarge(std::uint64_t required, std::uint64_t allowed)
      : std::runtime_error("DP state space needs " + std::to_string(required) +
                           " entries, budget is " + std::to_string(allowed)),
        entries_required(required),
        entries_allowed(allowed) {}
};

// Brute-force oracle refused: (k+1)^n above its enumeration cap.
struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverNotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnparsableSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External solver returned values that violate the model or the plan checker.
struct InvalidPlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bdhd
