#pragma once

#include <stdexcept>
#include <string>

namespace partalg {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct bead_count_too_small : error {
    using error::error;
};
struct malformed_diagram : error {
    using error::error;
};
struct size_mismatch : error {
    using error::error;
};
struct delta_not_invertible : error {
    using error::error;
};
struct delta_must_be_nonzero : error {
    using error::error;
};
struct incomparable_domain : error {
    using error::error;
};
struct label_too_large : error {
    using error::error;
};
struct generator_mismatch : error {
    using error::error;
};
struct chop_budget_exceeded : error {
    using error::error;
};
struct p_singular_label : error {
    using error::error;
};
struct identification_failed : error {
    using error::error;
};
struct chain_shape_violation : error {
    using error::error;
};
struct unsupported_case : error {
    using error::error;
};
struct desk_scale_exceeded : error {
    using error::error;
};

}  // namespace partalg
