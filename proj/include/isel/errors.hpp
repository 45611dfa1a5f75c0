#pragma once

#include <stdexcept>
#include <string>

namespace isel {

// Bad arguments or precondition violations (out-of-range index, wrong
// domain, malformed source instance).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unparseable instance, model or CSV file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem size exceeds the configured enumeration cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A realized election failed to reproduce its margin matrix within
// tolerance.
struct RealizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace isel
