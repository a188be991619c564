#pragma once

#include <stdexcept>
#include <string>

namespace sheetlab {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic on values from incompatible quadratic extensions.
struct incompatible_field_error : error {
    using error::error;
};

/// A component hit an exact zero while inverting a solution column.
struct pole_crossing_error : error {
    pole_crossing_error(const std::string& msg, int index, int step)
        : error(msg), index(index), step(step) {}
    int index;
    int step;
};

/// Non-invertible matrix where an invertible one is required.
struct degenerate_map_error : error {
    using error::error;
};

/// Operation only implemented for small dimensions.
struct unsupported_dimension_error : error {
    using error::error;
};

/// Evaluation requested exactly at a branch point.
struct branch_point_error : error {
    using error::error;
};

/// Requested variable cannot be eliminated from the given polynomial.
struct cannot_eliminate_error : error {
    using error::error;
};

/// Conic is not linear in the variable being solved for.
struct ambiguous_branch_error : error {
    using error::error;
};

/// A series term is evaluated exactly on a singularity.
struct singular_term_error : error {
    singular_term_error(const std::string& msg, int term_index)
        : error(msg), term_index(term_index) {}
    int term_index;
};

/// Input violates a documented structural requirement.
struct validation_error : error {
    using error::error;
};

/// Malformed textual input (polynomials, labels, config files).
struct parse_error : error {
    using error::error;
};

}  // namespace sheetlab
