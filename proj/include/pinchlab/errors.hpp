#pragma once

#include <stdexcept>
#include <string>

namespace pinchlab {

// Inputs whose shape is wrong (width mismatch, non-closed complex, bad alignment).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition does not hold (invalid range, non-cycle input, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested size exceeds a hard cap or the configured enumeration budget.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation applied outside its mathematical domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Leading coefficient of a trigonometric polynomial vanished; caller must lower deg.
struct DegreeDropError : std::runtime_error {
    explicit DegreeDropError(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter point sits on a stratum boundary where a chart map degenerates.
struct BoundaryError : std::runtime_error {
    explicit BoundaryError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pinch schedule references an impossible event; carries the offending index.
struct ScheduleError : std::runtime_error {
    ScheduleError(std::size_t index, const std::string& msg)
        : std::runtime_error("event " + std::to_string(index) + ": " + msg), index(index) {}
    std::size_t index;
};

// The fixed-point iteration of the numeric probe failed to contract.
struct ProfileTooLargeError : std::runtime_error {
    explicit ProfileTooLargeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pinchlab
