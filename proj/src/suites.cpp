#include "contractive/suites.hpp"

#include "contractive/error.hpp"
#include "contractive/json_io.hpp"
#include "contractive/moments.hpp"
#include "contractive/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace contractive {

namespace {

using Json = nlohmann::json;

FockVector random_state(std::mt19937_64& rng, std::size_t dim, std::size_t support) {
    std::normal_distribution<double> g(0.0, 1.0);
    AmplitudeVector v = AmplitudeVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < support; ++m) {
        v(static_cast<Eigen::Index>(m)) = Complex(g(rng), g(rng));
    }
    return FockVector(std::move(v)).normalized();
}

// Support strictly below the tail band, so second moments are exact.
std::size_t random_support(std::mt19937_64& rng, std::size_t dim) {
    const std::size_t top = std::min(tail_start(dim), std::size_t{40});
    return 1 + static_cast<std::size_t>(rng() % top);
}

double band_gap(const RqlBand& b, double v) { return std::min(v - b.lower, b.upper - v); }

SuiteResult uncertainty_suite(std::uint64_t budget, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uint64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < budget; ++i) {
        const MomentSummary s =
            summarize(random_state(rng, cfg.dim, random_support(rng, cfg.dim)), cfg.tolerances);
        const double margin = robertson_margin(s);
        worst = std::min(worst, margin);
        violations += margin < -1e-9 ? 1 : 0;
    }
    return {"uncertainty", violations == 0, budget,
            Json{{"states", budget}, {"violations", violations}, {"worst_margin", worst}}};
}

SuiteResult rql_suite(std::uint64_t budget, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    constexpr int kTimes = 20;
    std::uint64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < budget; ++i) {
        const MomentSummary s =
            summarize(random_state(rng, cfg.dim, random_support(rng, cfg.dim)), cfg.tolerances);
        for (int k = 0; k < kTimes; ++k) {
            const double t = ut(rng);
            const double go = band_gap(rql_band(s, System::oscillator, cfg.scales, t),
                                       oscillator_variance(s, cfg.scales.omega, t));
            const double gf = band_gap(rql_band(s, System::free_mass, cfg.scales, t),
                                       free_mass_variance(s, cfg.scales, t));
            worst = std::min({worst, go, gf});
            violations += (go < -1e-9 ? 1 : 0) + (gf < -1e-9 ? 1 : 0);
        }
    }
    return {"rql", violations == 0, budget,
            Json{{"states", budget},
                 {"times_per_state", kTimes},
                 {"systems", {"oscillator", "free_mass"}},
                 {"violations", violations},
                 {"worst_gap", worst}}};
}

SuiteResult saturation_suite(std::uint64_t budget, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    const std::size_t scs_dim = std::max<std::size_t>(cfg.dim, 192);
    std::uint64_t scs_failures = 0;
    double worst_touch = 0.0;
    double worst_residual = 0.0;
    std::uint64_t touching = 0;
    std::uint64_t touching_non_gaussian = 0;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const FockVector scs = make_scs(Displacement{{u(rng), u(rng)}},
                                        SqueezeParams{ur(rng), std::numbers::pi * u(rng)}, scs_dim,
                                        cfg.tolerances);
        const MomentSummary s = summarize(scs, cfg.tolerances);
        bool ok = true;
        for (int k = 0; k < 20; ++k) {
            const double t = ut(rng);
            const double go = std::abs(band_gap(rql_band(s, System::oscillator, cfg.scales, t),
                                                oscillator_variance(s, cfg.scales.omega, t)));
            const double gf = std::abs(band_gap(rql_band(s, System::free_mass, cfg.scales, t),
                                                free_mass_variance(s, cfg.scales, t)));
            worst_touch = std::max({worst_touch, go, gf});
            ok = ok && go < 1e-7 && gf < 1e-7;
        }
        const ExtremalAudit audit = audit_extremal(scs, cfg.tolerances);
        worst_residual = std::max(worst_residual, audit.residual);
        ok = ok && audit.residual < 1e-7 && audit.cov_sign_consistent;
        scs_failures += ok ? 0 : 1;

        // a state that reaches an open band edge must be a complex Gaussian
        const FockVector other = random_state(rng, cfg.dim, random_support(rng, cfg.dim));
        const MomentSummary o = summarize(other, cfg.tolerances);
        bool touches = false;
        for (int k = 0; k < 20; ++k) {
            const double t = ut(rng);
            const RqlBand band = rql_band(o, System::free_mass, cfg.scales, t);
            touches = touches || (band.half_width() > 1e-3 &&
                                  std::abs(band_gap(band, free_mass_variance(o, cfg.scales, t))) < 1e-7);
        }
        if (touches) {
            ++touching;
            touching_non_gaussian += audit_extremal(other, cfg.tolerances).residual < 1e-6 ? 0 : 1;
        }
    }
    return {"saturation", scs_failures == 0 && touching_non_gaussian == 0, budget,
            Json{{"scs_states", budget},
                 {"scs_failures", scs_failures},
                 {"worst_scs_gap", worst_touch},
                 {"worst_scs_residual", worst_residual},
                 {"random_states", budget},
                 {"random_touching", touching},
                 {"random_touching_non_gaussian", touching_non_gaussian}}};
}

SuiteResult overcompleteness_suite(std::uint64_t budget, const RunConfig& cfg) {
    const PhiState phi = lattice_phi(std::vector<double>{1.0, 1.0});
    OvercompletenessOptions opts;
    opts.budget = budget;
    opts.seed = cfg.seed;
    const OvercompletenessReport rep =
        check_overcompleteness(SqueezeParams{0.3, 0.0}, phi, 6, opts, cfg.tolerances);
    Json details = to_json(rep);
    details["threshold"] = 5e-3;
    return {"overcompleteness", rep.max_abs_deviation < 5e-3, budget, std::move(details)};
}

SuiteResult identities_suite(std::uint64_t budget, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.0, 0.8);
    const std::size_t dim = std::max<std::size_t>(cfg.dim, 128);
    IdentityResiduals worst;
    worst.safe_block = dim;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const bool reference = i == 0;
        const Displacement a{reference ? Complex(1.0, 0.5) : Complex(u(rng), u(rng))};
        const SqueezeParams xi = reference ? SqueezeParams{0.7, 1.1}
                                           : SqueezeParams{ur(rng), std::numbers::pi * u(rng)};
        const IdentityResiduals r = check_conjugation_identities(dim, a, xi);
        worst.safe_block = std::min(worst.safe_block, r.safe_block);
        worst.displacement = std::max(worst.displacement, r.displacement);
        worst.bogoliubov_displacement = std::max(worst.bogoliubov_displacement, r.bogoliubov_displacement);
        worst.squeeze = std::max(worst.squeeze, r.squeeze);
        worst.d_beta_vs_d_alpha = std::max(worst.d_beta_vs_d_alpha, r.d_beta_vs_d_alpha);
    }
    const bool pass = budget == 0 || (worst.safe_block > 0 && worst.displacement < 1e-8 &&
                                      worst.bogoliubov_displacement < 1e-8 &&
                                      worst.squeeze < 1e-8 && worst.d_beta_vs_d_alpha < 1e-8);
    return {"identities", pass, budget,
            Json{{"draws", budget},
                 {"dim", dim},
                 {"min_safe_block", budget == 0 ? 0 : worst.safe_block},
                 {"displacement", worst.displacement},
                 {"bogoliubov_displacement", worst.bogoliubov_displacement},
                 {"squeeze", worst.squeeze},
                 {"d_beta_vs_d_alpha", worst.d_beta_vs_d_alpha}}};
}

struct SuiteEntry {
    std::string name;
    std::uint64_t default_budget;
    std::function<SuiteResult(std::uint64_t, const RunConfig&)> run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"uncertainty", 500, uncertainty_suite},
        {"rql", 500, rql_suite},
        {"saturation", 100, saturation_suite},
        {"overcompleteness", 1'000'000, overcompleteness_suite},
        {"identities", 8, identities_suite},
    };
    return entries;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const SuiteEntry& e : registry()) {
            n.push_back(e.name);
        }
        return n;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, std::optional<std::uint64_t> budget,
                      const RunConfig& cfg) {
    for (const SuiteEntry& e : registry()) {
        if (e.name == name) {
            return e.run(budget.value_or(e.default_budget), cfg);
        }
    }
    throw Error(Errc::invalid_parameter, "unknown suite '" + std::string(name) + "'");
}

Json to_json(const SuiteResult& r, std::uint64_t seed) {
    return Json{{"suite", r.name},
                {"pass", r.pass},
                {"budget", r.budget},
                {"seed", seed},
                {"details", r.details}};
}

} // namespace contractive
