#pragma once

// Named verification suites behind `verify <suite>`.

#include "contractive/cli.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contractive {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::uint64_t budget = 0;
    nlohmann::json details;
};

/// uncertainty, rql, saturation, overcompleteness, identities
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Default budgets: 500 random states (uncertainty, rql), 100 state pairs
/// (saturation), 10^6 samples (overcompleteness), 8 parameter draws
/// (identities). Throws invalid_parameter for an unknown name.
[[nodiscard]] SuiteResult run_suite(std::string_view name, std::optional<std::uint64_t> budget,
                                    const RunConfig& cfg);

[[nodiscard]] nlohmann::json to_json(const SuiteResult& r, std::uint64_t seed);

} // namespace contractive
