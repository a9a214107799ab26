#pragma once

#include <stdexcept>
#include <string>

namespace qdel {

// A stored quantum object failed an invariant check (normalization,
// Hermiticity, trace, measurement completeness, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A code pair does not satisfy (C1)/(C2), detected either by an upfront
// check or because the measurement construction ran out of elements.
struct condition_violation : std::runtime_error {
    explicit condition_violation(const std::string& what) : std::runtime_error(what) {}
};

// The decoder realized an outcome that cannot occur for genuine
// post-deletion codewords (the residual projector fired).
struct invalid_state : std::runtime_error {
    explicit invalid_state(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qdel
