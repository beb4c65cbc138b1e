#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests drive it in-process.
//
// Exit codes: 0 success, 1 physics or verification failure, 2 usage error.

#include "contractive/dynamics.hpp"
#include "contractive/fock_core.hpp"
#include "contractive/tolerances.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace contractive {

enum class OutputFormat { json, csv };

struct RunConfig {
    std::size_t dim = 128;
    Tolerances tolerances;
    PhysicalScales scales;
    std::uint64_t seed = 0;
    OutputFormat output_format = OutputFormat::json;
};

inline constexpr std::size_t kMinCliDim = 16;

/// Defaults, with CONTRACTIVE_DIM (if set) replacing the default cutoff.
[[nodiscard]] RunConfig default_run_config();

/// Overlays {"dim", "tolerances": {name: value}, "scales": {"hbar", "mass",
/// "omega"}, "seed", "output_format"} onto cfg. Unknown keys are rejected.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

/// "a+bi", "a-bi", "a", "bi", "i", "-i". Throws invalid_parameter.
[[nodiscard]] Complex parse_complex(std::string_view text);
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);
[[nodiscard]] std::vector<Complex> parse_complex_list(std::string_view text);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace contractive
