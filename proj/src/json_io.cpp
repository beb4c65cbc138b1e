#include "contractive/json_io.hpp"

#include "contractive/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace contractive {

namespace {

double number_at(const Json& arr, std::size_t i, const char* what) {
    const Json& v = arr.at(i);
    if (!v.is_number()) {
        throw Error(Errc::invalid_spec, std::string(what) + " entries must be numbers");
    }
    return v.get<double>();
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Json to_json(const FockVector& state) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t m = 0; m < state.dim(); ++m) {
        re.push_back(state[m].real());
        im.push_back(state[m].imag());
    }
    return Json{{"dim", state.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

FockVector fock_vector_from_json(const Json& j) {
    try {
        const auto dim = j.at("dim").get<std::size_t>();
        const Json& re = j.at("re");
        const Json& im = j.at("im");
        if (!re.is_array() || !im.is_array() || re.size() != dim || im.size() != dim) {
            throw Error(Errc::invalid_spec, "re/im must be arrays of length dim");
        }
        AmplitudeVector v(static_cast<Eigen::Index>(dim));
        for (std::size_t m = 0; m < dim; ++m) {
            v(static_cast<Eigen::Index>(m)) = Complex(number_at(re, m, "re"), number_at(im, m, "im"));
        }
        return FockVector(std::move(v));
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_spec, std::string("bad Fock vector JSON: ") + e.what());
    }
}

Json to_json(const PhiSpec& spec) {
    Json free = Json::array();
    for (const Complex& c : spec.free) {
        free.push_back(Json::array({c.real(), c.imag()}));
    }
    return Json{{"n", spec.n}, {"N", spec.N}, {"free", std::move(free)}};
}

PhiSpec phi_spec_from_json(const Json& j) {
    try {
        PhiSpec spec;
        spec.n = j.at("n").get<std::size_t>();
        spec.N = j.at("N").get<std::size_t>();
        for (const Json& c : j.at("free")) {
            if (!c.is_array() || c.size() != 2) {
                throw Error(Errc::invalid_spec, "free coefficients are [re, im] pairs");
            }
            spec.free.emplace_back(number_at(c, 0, "free"), number_at(c, 1, "free"));
        }
        return spec;
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_spec, std::string("bad PhiSpec JSON: ") + e.what());
    }
}

Json to_json(const MomentSummary& s, const StateClass& flags) {
    return Json{{"var_x", s.var_x},
                {"var_p", s.var_p},
                {"cov", s.cov},
                {"n_bar", s.n_bar},
                {"product", s.uncertainty_product},
                {"flags",
                 {{"squeezed", flags.is_squeezed},
                  {"contractive", flags.is_contractive},
                  {"gcs", flags.is_gcs},
                  {"extremal", flags.is_extremal}}}};
}

std::string moments_csv_header() {
    return "var_x,var_p,cov,n_bar,product,squeezed,contractive,gcs,extremal";
}

std::string moments_csv_row(const MomentSummary& s, const StateClass& flags) {
    auto b = [](bool v) { return v ? "1" : "0"; };
    std::string row = format_double(s.var_x) + ',' + format_double(s.var_p) + ',' +
                      format_double(s.cov) + ',' + format_double(s.n_bar) + ',' +
                      format_double(s.uncertainty_product);
    row += std::string(",") + b(flags.is_squeezed) + ',' + b(flags.is_contractive) + ',' +
           b(flags.is_gcs) + ',' + b(flags.is_extremal);
    return row;
}

Json to_json(const OvercompletenessReport& r) {
    Json j{{"method", std::string(to_string(r.method))},
           {"probe_dim", r.probe_dim},
           {"budget", r.budget},
           {"max_abs_deviation", r.max_abs_deviation},
           {"rms_deviation", r.rms_deviation},
           {"radius", r.radius},
           {"state_dim", r.state_dim}};
    if (r.method == IntegrationMethod::monte_carlo) {
        j["seed"] = r.seed;
    } else {
        j["radial_nodes"] = r.radial_nodes;
        j["angular_nodes"] = r.angular_nodes;
    }
    return j;
}

std::string trace_csv(const EvolutionTrace& trace) {
    std::string out = "t,var_x,rql_lower,rql_upper,sql\n";
    const bool has_sql = trace.system == System::free_mass;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        out += format_double(trace.times[i]) + ',' + format_double(trace.var_x_t[i]) + ',' +
               format_double(trace.rql_lower[i]) + ',' + format_double(trace.rql_upper[i]) + ',';
        if (has_sql) {
            out += format_double(trace.sql[i]);
        }
        out += '\n';
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::invalid_spec, "cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_spec, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::invalid_spec, "cannot write " + path.string());
    }
    out << text;
}

} // namespace contractive
