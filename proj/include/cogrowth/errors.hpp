#pragma once

#include <stdexcept>
#include <string>

namespace cogrowth {

// Thrown when a requested construction would exceed the configured vertex cap.
struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a brute-force enumeration would exceed its step budget.
struct WorkCapExceeded : std::runtime_error {
    explicit WorkCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative solver fails to meet tolerance within max_iter.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a series is too short for the requested truncation tolerance.
struct InsufficientSeries : std::runtime_error {
    explicit InsufficientSeries(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cogrowth
