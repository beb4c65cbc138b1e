#include "contractive/error.hpp"

namespace contractive {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::shape_mismatch:    return "shape-mismatch";
    case Errc::out_of_range:      return "out-of-range";
    case Errc::truncation:        return "truncation";
    case Errc::degenerate_spec:   return "degenerate-spec";
    case Errc::trivial_state:     return "trivial-state";
    case Errc::invalid_spec:      return "invalid-spec";
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::precondition:      return "precondition";
    case Errc::not_contractive:   return "not-contractive";
    case Errc::invalid_state:     return "invalid-state";
    case Errc::numerical:         return "numerical";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

} // namespace contractive
