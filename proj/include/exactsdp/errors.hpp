#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactsdp {

/// Input data failed a structural or semantic check before the solve started.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A text document could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact elimination hit a zero pivot on a matrix that was required to be
/// nonsingular. `stage` is the 1-based elimination step that failed.
struct SingularMatrixError : std::runtime_error {
    std::size_t stage;
    SingularMatrixError(const std::string& what, std::size_t stage_)
        : std::runtime_error(what), stage(stage_) {}
};

/// The given constraint matrices are linearly dependent.
struct RankDeficiencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact run-time invariant of the method failed.  Since every check is
/// performed in exact arithmetic this indicates violated input assumptions
/// (or a bug), never numerical noise.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The certified iteration budget was exhausted.
struct IterationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace exactsdp
