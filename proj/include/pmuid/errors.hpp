#pragma once

#include <stdexcept>
#include <string>

namespace pmuid {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs violate a documented precondition (bad shapes, out-of-range
// parameters, malformed configs, schema mismatches).
struct validation_error : error {
    using error::error;
};

// A matrix that must be (numerically) nonsingular or full rank is not:
// dependent pilot rows, singular selected submatrices, and the like.
struct degeneracy_error : error {
    using error::error;
};

// File contents could not be parsed; message carries the line number.
struct parse_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

// Adaptive pilot training could not reach the requested tolerance.
// Carries the per-K bound trace so callers can report how close it got.
struct training_error : error {
    std::vector<std::pair<int, double>> bound_trace;

    training_error(const std::string& msg,
                   std::vector<std::pair<int, double>> trace = {})
        : error(msg), bound_trace(std::move(trace)) {}
};

}  // namespace pmuid
