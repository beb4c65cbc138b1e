#include "contractive/cli.hpp"

#include "contractive/error.hpp"
#include "contractive/gcs_solver.hpp"
#include "contractive/json_io.hpp"
#include "contractive/moments.hpp"
#include "contractive/state_factory.hpp"
#include "contractive/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

namespace contractive {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        throw Error(Errc::invalid_parameter,
                    "cannot parse '" + std::string(s) + "' as " + std::string(what));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::invalid_dimension:
    case Errc::out_of_range:
    case Errc::invalid_spec:
    case Errc::invalid_parameter:
        return 2;
    default:
        return 1;
    }
}

std::string moments_text(const MomentSummary& s, const RunConfig& cfg) {
    const StateClass flags = classify(s, cfg.tolerances);
    if (cfg.output_format == OutputFormat::csv) {
        return moments_csv_header() + '\n' + moments_csv_row(s, flags) + '\n';
    }
    return to_json(s, flags).dump(2) + '\n';
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

FockVector load_state(const std::string& path) { return fock_vector_from_json(read_json_file(path)); }

struct BuildArgs {
    std::string kind;
    std::string alpha = "0";
    double r = 0.0;
    double theta = 0.0;
    std::size_t n = 0;
    std::size_t N = 0;
    std::string free;
    std::string weights;
    double nbar = 0.0;
    std::size_t s = 0;
    std::string phi;
    std::string lambda = "1";
    double mean_x = 0.0;
    double mean_p = 0.0;
    std::string out;
    CLI::Option* n_opt = nullptr;
    CLI::Option* N_opt = nullptr;
    CLI::Option* free_opt = nullptr;
    CLI::Option* weights_opt = nullptr;
    CLI::Option* nbar_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
};

PhiSpec spec_from_flags(std::size_t n, std::size_t N, bool has_N, const std::string& free) {
    PhiSpec spec;
    spec.n = n;
    spec.free = parse_complex_list(free);
    spec.N = has_N ? N : n + spec.free.size() + 1;
    return spec;
}

PhiState lattice_from_flags(const BuildArgs& b, std::size_t dim) {
    if (*b.weights_opt && *b.nbar_opt) {
        throw UsageError("--weights and --nbar are mutually exclusive");
    }
    if (*b.weights_opt) {
        return lattice_phi(parse_real_list(b.weights), dim);
    }
    if (*b.nbar_opt) {
        return lattice_phi_for_nbar(b.nbar, b.s, dim);
    }
    throw UsageError("gcs-lattice needs --weights or --nbar");
}

FockVector build_state(const BuildArgs& b, const RunConfig& cfg) {
    const std::size_t dim = cfg.dim;
    const Tolerances& tol = cfg.tolerances;
    const Displacement alpha{parse_complex(b.alpha)};
    const SqueezeParams xi{b.r, b.theta};
    if (b.r < 0.0) {
        throw UsageError("--r must be >= 0");
    }
    if (b.kind == "number") {
        if (!*b.n_opt) {
            throw UsageError("number needs --n");
        }
        return number_state(b.n, dim);
    }
    if (b.kind == "coherent") {
        return make_coherent(alpha, dim, tol);
    }
    if (b.kind == "displaced-number") {
        if (!*b.n_opt) {
            throw UsageError("displaced-number needs --n");
        }
        return make_displaced_number(alpha, b.n, dim, tol);
    }
    if (b.kind == "scs") {
        return make_scs(alpha, xi, dim, tol);
    }
    if (b.kind == "gcs-lattice") {
        return lattice_from_flags(b, dim).state;
    }
    if (b.kind == "gcs-solve") {
        if (!*b.free_opt) {
            throw UsageError("gcs-solve needs --free");
        }
        return solve_phi(spec_from_flags(b.n, b.N, static_cast<bool>(*b.N_opt), b.free), dim).state;
    }
    if (b.kind == "sgcs") {
        FockVector phi = number_state(0, dim);
        if (!b.phi.empty()) {
            phi = load_state(b.phi);
        } else if (*b.weights_opt || *b.nbar_opt) {
            phi = lattice_from_flags(b, dim).state;
        }
        return make_sgcs(alpha, xi, phi, dim, tol);
    }
    if (b.kind == "extremal") {
        if (!*b.lambda_opt) {
            throw UsageError("extremal needs --lambda");
        }
        return extremal_fock_state(ExtremalLambda(parse_complex(b.lambda)), b.mean_x, b.mean_p, dim,
                                   tol);
    }
    throw UsageError("unknown state kind '" + b.kind + "'");
}

void add_scale_options(CLI::App* cmd, PhysicalScales& scales) {
    cmd->add_option("--hbar", scales.hbar, "Reduced Planck constant");
    cmd->add_option("--mass", scales.mass, "Particle mass");
    cmd->add_option("--omega", scales.omega, "Angular frequency");
}

std::string sweep_csv(const std::string& family, const std::vector<Complex>& alphas,
                      const std::vector<double>& rs, const std::vector<double>& thetas,
                      const std::vector<double>& nbars, const RunConfig& cfg) {
    std::string csv = "family,alpha_re,alpha_im,r,theta,nbar_seed,quantity,value\n";
    for (const Complex a : alphas) {
        for (const double r : rs) {
            if (r < 0.0) {
                throw UsageError("--r values must be >= 0");
            }
            for (const double th : thetas) {
                for (const double nb : nbars) {
                    const SqueezeParams xi{r, th};
                    FockVector phi = number_state(0, cfg.dim);
                    double seed_nbar = 0.0;
                    if (nb > 0.0) {
                        const PhiState seed = lattice_phi_for_nbar(nb, 0, cfg.dim);
                        phi = seed.state;
                        seed_nbar = seed.n_bar;
                    }
                    const FockVector psi = make_sgcs(Displacement{a}, xi, phi, cfg.dim, cfg.tolerances);
                    const MomentSummary m = summarize(psi, cfg.tolerances);
                    const MomentSummary pred = sgcs_predicted_moments(seed_nbar, xi);
                    const std::string key = family + ',' + format_double(a.real()) + ',' +
                                            format_double(a.imag()) + ',' + format_double(r) + ',' +
                                            format_double(th) + ',' + format_double(nb) + ',';
                    const std::pair<const char*, double> rows[] = {
                        {"var_x", m.var_x},          {"var_p", m.var_p},
                        {"cov", m.cov},              {"n_bar", m.n_bar},
                        {"product", m.uncertainty_product},
                        {"var_x_pred", pred.var_x},  {"var_p_pred", pred.var_p},
                        {"cov_pred", pred.cov}};
                    for (const auto& [name, value] : rows) {
                        csv += key + name + ',' + format_double(value) + '\n';
                    }
                }
            }
        }
    }
    return csv;
}

} // namespace

RunConfig default_run_config() {
    RunConfig cfg;
    if (const char* env = std::getenv("CONTRACTIVE_DIM"); env != nullptr && *env != '\0') {
        const std::string_view s(env);
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error(Errc::invalid_parameter, "CONTRACTIVE_DIM must be a positive integer");
        }
        cfg.dim = v;
    }
    return cfg;
}

void apply_config_json(RunConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw Error(Errc::invalid_spec, "config must be a JSON object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "dim") {
                cfg.dim = value.get<std::size_t>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "output_format") {
                const auto f = value.get<std::string>();
                if (f != "json" && f != "csv") {
                    throw Error(Errc::invalid_spec, "output_format must be json or csv");
                }
                cfg.output_format = f == "csv" ? OutputFormat::csv : OutputFormat::json;
            } else if (key == "scales") {
                for (const auto& [name, v] : value.items()) {
                    double* slot = name == "hbar"    ? &cfg.scales.hbar
                                   : name == "mass"  ? &cfg.scales.mass
                                   : name == "omega" ? &cfg.scales.omega
                                                     : nullptr;
                    if (slot == nullptr) {
                        throw Error(Errc::invalid_spec, "unknown scale '" + name + "'");
                    }
                    *slot = v.get<double>();
                }
            } else if (key == "tolerances") {
                for (const auto& [name, v] : value.items()) {
                    double* slot = name == "tail_mass"        ? &cfg.tolerances.tail_mass
                                   : name == "hermitian_imag" ? &cfg.tolerances.hermitian_imag
                                   : name == "gcs_check"      ? &cfg.tolerances.gcs_check
                                   : name == "classify"       ? &cfg.tolerances.classify
                                                              : nullptr;
                    if (slot == nullptr) {
                        throw Error(Errc::invalid_spec, "unknown tolerance '" + name + "'");
                    }
                    *slot = v.get<double>();
                }
            } else {
                throw Error(Errc::invalid_spec, "unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::invalid_spec, std::string("bad config: ") + e.what());
    }
}

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s += c;
        }
    }
    if (s.empty()) {
        throw Error(Errc::invalid_parameter, "empty complex literal");
    }
    if (s.back() != 'i') {
        return {parse_double(s, "a complex number"), 0.0};
    }
    s.pop_back();
    // split before the last sign that is not an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    const std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_part = cut == std::string::npos ? s : s.substr(cut);
    if (im_part.empty() || im_part == "+") {
        im_part = "1";
    } else if (im_part == "-") {
        im_part = "-1";
    } else if (im_part.front() == '+') {
        im_part.erase(0, 1);
    }
    const double re = re_part.empty() ? 0.0 : parse_double(re_part, "a complex number");
    return {re, parse_double(im_part, "a complex number")};
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (std::string_view part : split(text, ',')) {
        out.push_back(parse_double(part, "a number"));
    }
    return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    if (text.empty()) {
        return out;
    }
    for (std::string_view part : split(text, ',')) {
        out.push_back(parse_complex(part));
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Squeezed and generic coherent states in a truncated Fock space", "contractive"};
    app.require_subcommand(1);
    // global options may follow the subcommand; subcommands inherit this
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string config_path;
    std::size_t dim_flag = 0;
    std::string format_flag;
    auto* dim_opt = app.add_option("--dim", dim_flag, "Fock cutoff (overrides config and CONTRACTIVE_DIM)");
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--format", format_flag, "Output format for summaries")
        ->check(CLI::IsMember({"json", "csv"}));

    RunConfig cfg;
    PhysicalScales scale_flags;

    // state build / state moments
    auto* state = app.add_subcommand("state", "Build states and inspect their moments");
    state->require_subcommand(1);
    BuildArgs b;
    auto* build = state->add_subcommand("build", "Build a state and write it as JSON");
    build->add_option("kind", b.kind, "State family")
        ->required()
        ->check(CLI::IsMember({"number", "coherent", "displaced-number", "scs", "gcs-lattice",
                               "gcs-solve", "sgcs", "extremal"}));
    build->add_option("--alpha", b.alpha, "Displacement, a+bi");
    build->add_option("--r", b.r, "Squeeze magnitude");
    build->add_option("--theta", b.theta, "Squeeze phase (radians)");
    b.n_opt = build->add_option("--n", b.n, "Number index, or lowest seed level");
    b.N_opt = build->add_option("--N", b.N, "Highest seed level");
    b.free_opt = build->add_option("--free", b.free, "Seed coefficients c_{n+1}..c_{N-1}, comma separated");
    b.weights_opt = build->add_option("--weights", b.weights, "Lattice weights on |0>, |3>, |6>, ...");
    b.nbar_opt = build->add_option("--nbar", b.nbar, "Target mean photon number of a lattice seed");
    build->add_option("--s", b.s, "Top lattice index for --nbar (0 picks the smallest)");
    build->add_option("--phi", b.phi, "Seed state JSON for sgcs");
    b.lambda_opt = build->add_option("--lambda", b.lambda, "Extremal Gaussian parameter, a+bi");
    build->add_option("--mean-x", b.mean_x, "Extremal state <x>");
    build->add_option("--mean-p", b.mean_p, "Extremal state <p>");
    build->add_option("--out", b.out, "Output file for the state JSON");

    std::string moments_state;
    auto* moments = state->add_subcommand("moments", "Print the moment summary of a state file");
    moments->add_option("--state", moments_state, "State JSON")->required();

    // evolve
    std::string ev_state;
    std::string ev_system;
    double ev_tmax = 0.0;
    std::size_t ev_samples = 101;
    std::string ev_out;
    bool ev_expect = false;
    auto* evolve = app.add_subcommand("evolve", "Propagate the position variance and its bounds");
    evolve->add_option("--state", ev_state, "State JSON")->required();
    evolve->add_option("--system", ev_system, "oscillator or free-mass")->required();
    evolve->add_option("--t-max", ev_tmax, "Final time")->required();
    evolve->add_option("--samples", ev_samples, "Number of time samples");
    evolve->add_option("--out", ev_out, "CSV output file (stdout if omitted)");
    evolve->add_flag("--expect-contractive", ev_expect, "Fail unless the covariance is negative");
    add_scale_options(evolve, scale_flags);

    // rql-band
    std::string band_state;
    std::string band_system;
    std::string band_times;
    auto* band = app.add_subcommand("rql-band", "Rigorous variance band at given times");
    band->add_option("--state", band_state, "State JSON")->required();
    band->add_option("--system", band_system, "oscillator or free-mass")->required();
    band->add_option("--t", band_times, "Times, comma separated")->required();
    add_scale_options(band, scale_flags);

    // gcs solve
    auto* gcs = app.add_subcommand("gcs", "Seed-state solver");
    gcs->require_subcommand(1);
    std::string solve_spec;
    std::size_t solve_n = 0;
    std::size_t solve_N = 0;
    std::string solve_free;
    std::string solve_out;
    auto* solve = gcs->add_subcommand("solve", "Solve for c_n and c_N given the interior coefficients");
    auto* spec_opt = solve->add_option("--spec", solve_spec, "PhiSpec JSON file");
    solve->add_option("--n", solve_n, "Lowest level");
    auto* solve_N_opt = solve->add_option("--N", solve_N, "Highest level");
    auto* solve_free_opt = solve->add_option("--free", solve_free, "Coefficients c_{n+1}..c_{N-1}");
    solve->add_option("--out", solve_out, "Output file for the state JSON");

    // verify
    std::string suite;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.emplace_back("all");
    auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON report on stdout");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
    auto* budget_opt = verify->add_option("--budget", budget, "Suite size (ignored by 'all')");
    auto* seed_opt = verify->add_option("--seed", seed, "Random seed");

    // sweep
    std::string sw_family = "scs";
    std::string sw_alpha = "0";
    std::string sw_r = "0,0.5,1";
    std::string sw_theta = "0,1.5707963267948966";
    std::string sw_nbar = "0";
    std::string sw_out;
    auto* sweep = app.add_subcommand("sweep", "Cartesian parameter grid to long-format CSV");
    sweep->add_option("--family", sw_family, "scs or sgcs")->check(CLI::IsMember({"scs", "sgcs"}));
    sweep->add_option("--alpha", sw_alpha, "Displacements, comma separated a+bi");
    sweep->add_option("--r", sw_r, "Squeeze magnitudes");
    sweep->add_option("--theta", sw_theta, "Squeeze phases");
    sweep->add_option("--nbar", sw_nbar, "Seed mean photon numbers (sgcs)");
    sweep->add_option("--out", sw_out, "CSV output file (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        cfg = default_run_config();
        if (!config_path.empty()) {
            apply_config_json(cfg, read_json_file(config_path));
        }
        if (*dim_opt) {
            cfg.dim = dim_flag;
        }
        if (!format_flag.empty()) {
            cfg.output_format = format_flag == "csv" ? OutputFormat::csv : OutputFormat::json;
        }
        if (cfg.dim < kMinCliDim) {
            throw UsageError("dim must be >= " + std::to_string(kMinCliDim));
        }
        auto merge_scales = [&](CLI::App* cmd) {
            if (cmd->count("--hbar") > 0) {
                cfg.scales.hbar = scale_flags.hbar;
            }
            if (cmd->count("--mass") > 0) {
                cfg.scales.mass = scale_flags.mass;
            }
            if (cmd->count("--omega") > 0) {
                cfg.scales.omega = scale_flags.omega;
            }
            cfg.scales.validate();
        };

        if (*build) {
            const FockVector psi = build_state(b, cfg);
            const MomentSummary s = summarize(psi, cfg.tolerances);
            if (!b.out.empty()) {
                write_text_file(b.out, to_json(psi).dump(2) + '\n');
            }
            out << moments_text(s, cfg);
            return 0;
        }
        if (*moments) {
            out << moments_text(summarize(load_state(moments_state), cfg.tolerances), cfg);
            return 0;
        }
        if (*evolve) {
            merge_scales(evolve);
            if (!(ev_tmax > 0.0)) {
                throw UsageError("--t-max must be > 0");
            }
            if (ev_samples < 2) {
                throw UsageError("--samples must be >= 2");
            }
            const System system = system_from_string(ev_system);
            const MomentSummary s = summarize(load_state(ev_state), cfg.tolerances);
            const std::vector<double> times = linspace(0.0, ev_tmax, ev_samples);
            const EvolutionTrace trace = system == System::oscillator
                                             ? evolve_oscillator(s, cfg.scales.omega, times)
                                             : evolve_free_mass(s, cfg.scales, times);
            emit(ev_out, trace_csv(trace), out);
            std::ostream& info = ev_out.empty() ? err : out;
            const bool contractive = classify(s, cfg.tolerances).is_contractive;
            if (contractive && system == System::free_mass) {
                const ContractionWindow w = contraction_window(s, cfg.scales);
                info << "t_M=" << format_double(w.t_M) << '\n'
                     << "t_min=" << format_double(w.t_min) << '\n'
                     << "var_min=" << format_double(w.var_at_min) << '\n';
            }
            if (ev_expect && !contractive) {
                err << "state is not contractive (cov = " << format_double(s.cov) << ")\n";
                return 1;
            }
            return 0;
        }
        if (*band) {
            merge_scales(band);
            const System system = system_from_string(band_system);
            const MomentSummary s = summarize(load_state(band_state), cfg.tolerances);
            const std::vector<double> times = parse_real_list(band_times);
            if (cfg.output_format == OutputFormat::csv) {
                std::string csv = "t,var_x,rql_lower,rql_upper\n";
                for (double t : times) {
                    const RqlBand r = rql_band(s, system, cfg.scales, t);
                    const double v = system == System::oscillator
                                         ? oscillator_variance(s, cfg.scales.omega, t)
                                         : free_mass_variance(s, cfg.scales, t);
                    csv += format_double(t) + ',' + format_double(v) + ',' +
                           format_double(r.lower) + ',' + format_double(r.upper) + '\n';
                }
                out << csv;
            } else {
                nlohmann::json rows = nlohmann::json::array();
                for (double t : times) {
                    const RqlBand r = rql_band(s, system, cfg.scales, t);
                    const double v = system == System::oscillator
                                         ? oscillator_variance(s, cfg.scales.omega, t)
                                         : free_mass_variance(s, cfg.scales, t);
                    rows.push_back({{"t", t}, {"var_x", v}, {"lower", r.lower}, {"upper", r.upper}});
                }
                out << rows.dump(2) << '\n';
            }
            return 0;
        }
        if (*solve) {
            PhiSpec spec;
            if (*spec_opt) {
                if (*solve_free_opt || *solve_N_opt) {
                    throw UsageError("--spec excludes --N and --free");
                }
                spec = phi_spec_from_json(read_json_file(solve_spec));
            } else if (*solve_free_opt) {
                spec = spec_from_flags(solve_n, solve_N, static_cast<bool>(*solve_N_opt), solve_free);
            } else {
                throw UsageError("gcs solve needs --spec or --free");
            }
            const PhiState phi = solve_phi(spec, cfg.dim);
            const PhiCheck check = check_phi(phi.state, cfg.tolerances.gcs_check);
            if (!solve_out.empty()) {
                write_text_file(solve_out, to_json(phi.state).dump(2) + '\n');
            }
            out << nlohmann::json{{"n", spec.n},
                                  {"N", spec.N},
                                  {"n_bar", phi.n_bar},
                                  {"residual_a", check.residual_a},
                                  {"residual_a2", check.residual_a2},
                                  {"ok", check.ok}}
                       .dump(2)
                << '\n';
            return check.ok ? 0 : 1;
        }
        if (*verify) {
            if (*seed_opt) {
                cfg.seed = seed;
            }
            std::optional<std::uint64_t> requested;
            if (*budget_opt) {
                requested = budget;
            }
            if (suite == "all") {
                nlohmann::json results = nlohmann::json::array();
                bool pass = true;
                for (const std::string& name : suite_names()) {
                    const SuiteResult r = run_suite(name, std::nullopt, cfg);
                    pass = pass && r.pass;
                    results.push_back(to_json(r, cfg.seed));
                }
                out << nlohmann::json{{"suite", "all"}, {"pass", pass}, {"seed", cfg.seed}, {"results", results}}
                           .dump(2)
                    << '\n';
                return pass ? 0 : 1;
            }
            const SuiteResult r = run_suite(suite, requested, cfg);
            out << to_json(r, cfg.seed).dump(2) << '\n';
            return r.pass ? 0 : 1;
        }
        if (*sweep) {
            std::vector<double> nbars = parse_real_list(sw_nbar);
            if (sw_family == "scs") {
                if (std::any_of(nbars.begin(), nbars.end(), [](double v) { return v != 0.0; })) {
                    throw UsageError("--nbar applies to the sgcs family only");
                }
            }
            if (std::any_of(nbars.begin(), nbars.end(), [](double v) { return v < 0.0; })) {
                throw UsageError("--nbar values must be >= 0");
            }
            emit(sw_out,
                 sweep_csv(sw_family, parse_complex_list(sw_alpha), parse_real_list(sw_r),
                           parse_real_list(sw_theta), nbars, cfg),
                 out);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << app.help();
    return 2;
}

} // namespace contractive
