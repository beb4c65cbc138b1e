#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contractive {

enum class Errc {
    invalid_dimension,
    shape_mismatch,
    out_of_range,
    truncation,
    degenerate_spec,
    trivial_state,
    invalid_spec,
    invalid_parameter,
    precondition,
    not_contractive,
    invalid_state,
    numerical,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace contractive
