// Copyright 2026 paralog contributors
#pragma once

#include <stdexcept>
#include <string>

namespace paralog {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value or structure failed a semantic check (bad distribution, non-poset
// order, incidence off the grade chain, ...).
struct ValidationError : Error {
  using Error::Error;
};

// An input is structurally fine but too large for the implementation limits.
struct CapacityError : Error {
  using Error::Error;
};

// Evaluation hit a name with no interpretation and open-world mode is off.
struct EvalError : Error {
  using Error::Error;
};

// A file could not be read or its JSON payload is malformed.
struct IoError : Error {
  using Error::Error;
};

}  // namespace paralog
