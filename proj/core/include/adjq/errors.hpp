#pragma once

#include <stdexcept>
#include <string>

namespace adjq {

// Base class for all library faults so callers can catch adjq errors as a group.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A family/rank combination outside the supported tables (e.g. D2, E5, rank 9).
struct InvalidTypeError : Error {
  using Error::Error;
};

// Dimension or rank mismatch between the arguments of an operation.
struct RankMismatchError : Error {
  using Error::Error;
};

// An enumeration exceeded its configured resource cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Input data violates a structural precondition (not a falsified lemma).
struct InvariantViolationError : Error {
  using Error::Error;
};

// Command line / configuration misuse.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace adjq
