#pragma once
#include <stdexcept>
#include <string>

namespace ramsey {

// base for everything thrown on purpose; CLI maps subclasses to exit codes
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad input data: malformed files, out-of-range indices, duplicate edges
struct parse_error : error {
    using error::error;
};

// a documented mathematical precondition does not hold (message names it)
struct precondition_error : error {
    using error::error;
};

// a constructive step could not deliver either contracted outcome; callers
// must not rely on the corresponding guarantee at this instance
struct declared_failure : error {
    using error::error;
};

// exhaustive search requested beyond the configured envelope
struct resource_limit_error : error {
    using error::error;
};

}  // namespace ramsey
