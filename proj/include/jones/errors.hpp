#pragma once

#include <stdexcept>
#include <string>

namespace jones {

// Invalid user input or parameters. The CLI maps this to exit code 1.
// Plain std::invalid_argument is used for most cases; truncation_error is
// separated so callers can offer the --force-truncation escape hatch.
struct truncation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A broken internal assumption (e.g. a nonzero remainder when dividing the
// bracket by the loop value). The CLI maps this to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace jones
