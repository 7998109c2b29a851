#pragma once

#include <stdexcept>
#include <string>

namespace corrnet {

/// Raised for malformed input data and violated operation preconditions.
/// The CLI maps it to exit code 2; configuration/usage problems are
/// reported separately with exit code 1.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace corrnet
