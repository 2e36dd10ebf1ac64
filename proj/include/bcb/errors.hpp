#pragma once

#include <stdexcept>
#include <string>

namespace bcb {

// A computation was refused before starting because it would exceed a
// configured resource cap (brute-force cap, memory budget). Never raised
// mid-flight: budgets are estimated up front.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact re-verification failed (identity mismatch, non-solution emitted).
// Signals an implementation or transcription bug, not bad user input.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace bcb
