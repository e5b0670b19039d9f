#pragma once

#include <stdexcept>
#include <string>

namespace gdes {

// Error categories map onto the CLI exit-code contract.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

struct spectral_error : std::runtime_error {
    explicit spectral_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct disconnected_error : std::runtime_error {
    explicit disconnected_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a certificate's numeric re-verification contradicts the theorem
// it certifies; never silently ignored.
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gdes
