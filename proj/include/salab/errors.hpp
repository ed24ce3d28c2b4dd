#pragma once

#include <stdexcept>
#include <string>

namespace salab {

// Base class for all library errors. Subclasses encode the failure kind so
// callers (and the CLI) can map them to exit codes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural misuse: mismatched chart dimension, Lie spec, bidegree, ...
struct TypeError : Error {
    explicit TypeError(const std::string& msg) : Error(msg) {}
};

// Textual syntax errors; position is a 0-based offset into the input string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

struct NonIntegrableConnection : Error {
    explicit NonIntegrableConnection(const std::string& msg) : Error(msg) {}
};

// d_Q and friends require curvature of pure type (1,1).
struct BadCurvatureType : Error {
    explicit BadCurvatureType(const std::string& msg) : Error(msg) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& msg) : Error(msg) {}
};

struct MCViolated : Error {
    explicit MCViolated(const std::string& msg) : Error(msg) {}
};

struct IncompatibleFamily : Error {
    explicit IncompatibleFamily(const std::string& msg) : Error(msg) {}
};

}  // namespace salab
