#pragma once

#include <stdexcept>
#include <string>

namespace supernorm {

// Configuration the library refuses to evaluate: divergent ensembles,
// non-integer exponents in exact arithmetic, enumeration of infinite sets.
class unsupported_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A request that would exceed a configured budget (memory, default caps).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace supernorm
