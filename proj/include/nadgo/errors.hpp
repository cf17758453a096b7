#pragma once

#include <stdexcept>
#include <string>

namespace nadgo {

// Bad values fed into an operation (non-finite feature, out-of-range codeword,
// length mismatch, negative bound input).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Calibration cannot produce a usable artifact (too few samples, degenerate
// quantile edges, empty class stream, constant baseline).
struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or inconsistent configuration (unknown job size, missing reference
// class, empty backend list).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Locked-artifact violation: digest mismatch, config-tuple mismatch, or a
// corrupt reference vector. Fatal before any execution.
struct ArtifactError : std::runtime_error {
    explicit ArtifactError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation issued in an illegal lifecycle state (append after finalize,
// evaluate after abort, double finalize).
struct LifecycleError : std::runtime_error {
    explicit LifecycleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nadgo
