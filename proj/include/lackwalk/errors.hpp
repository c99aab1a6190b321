#pragma once

#include <stdexcept>
#include <string>

namespace lackwalk {

// Invalid problem parameters (bounds violations, bad gamma, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// State / operator dimension disagreement.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Requested full-space problem exceeds the configured amplitude cap.
class CapacityExceeded : public std::runtime_error {
public:
    explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lackwalk
