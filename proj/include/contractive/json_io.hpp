#pragma once

// File and wire formats: FockVector and PhiSpec JSON, MomentSummary JSON/CSV
// rows, EvolutionTrace CSV and report JSON. Numbers are written with
// std::to_chars (shortest round-trip, locale-free).

#include "contractive/dynamics.hpp"
#include "contractive/fock_core.hpp"
#include "contractive/gcs_solver.hpp"
#include "contractive/moments.hpp"
#include "contractive/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace contractive {

using Json = nlohmann::json;

/// {"dim": D, "re": [...], "im": [...]}
[[nodiscard]] Json to_json(const FockVector& state);
[[nodiscard]] FockVector fock_vector_from_json(const Json& j);

/// {"n": int, "N": int, "free": [[re, im], ...]}
[[nodiscard]] Json to_json(const PhiSpec& spec);
[[nodiscard]] PhiSpec phi_spec_from_json(const Json& j);

[[nodiscard]] Json to_json(const MomentSummary& s, const StateClass& flags);
[[nodiscard]] std::string moments_csv_header();
[[nodiscard]] std::string moments_csv_row(const MomentSummary& s, const StateClass& flags);

[[nodiscard]] Json to_json(const OvercompletenessReport& r);

/// Header "t,var_x,rql_lower,rql_upper,sql"; the sql column is empty for the oscillator.
[[nodiscard]] std::string trace_csv(const EvolutionTrace& trace);

[[nodiscard]] std::string format_double(double v);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace contractive
