#pragma once

#include <stdexcept>
#include <string>

namespace zadic {

/// Bad k or p: radix below 2, modulus below 2, or a malformed range.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A digit value outside [0, k).
struct InvalidDigit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (malformed number text, bound
/// checks on fewer than 3 digits, non-conforming parameters).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A grid cell with conforming parameters produced a limit set other than
/// {1, 2}. Carries a diagnostic dump of the offending cell; if one of
/// these ever fires outside a unit test, either the sweep is broken or a
/// theorem is.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zadic
