#pragma once

#include <stdexcept>

namespace quartic {

// A violated internal invariant: wrong cardinality out of an enumeration,
// an image that left its expected set, a corrupt census.  Always a bug or
// corrupted input, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// A computation refused to start or continue because it would exceed a
// configured budget (memory, orbit size, explicit-enumeration limit).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A census cache whose fingerprint does not match the current build.
struct CacheMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quartic
