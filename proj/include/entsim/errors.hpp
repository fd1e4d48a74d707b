#pragma once

#include <stdexcept>
#include <string>

namespace entsim {

/// Invalid argument or malformed configuration (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured resource cap, e.g. brute-force state
/// vectors above the spin cap (CLI exit code 3).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace entsim
