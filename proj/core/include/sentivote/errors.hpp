#pragma once

#include <stdexcept>
#include <string>

namespace sentivote {

// Bad or inconsistent input data (malformed files, invariant violations).
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller misuse (bad flags, missing required paths). CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sentivote
