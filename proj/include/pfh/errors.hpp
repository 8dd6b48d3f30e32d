#pragma once

#include <stdexcept>

namespace pfh {

/// A computed quantity broke a law it must satisfy. Signals a bug or a
/// profile outside the supported class; the CLI maps it to exit code 1.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GradingMismatch : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct NoClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGrading : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pfh
