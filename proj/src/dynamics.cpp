#include "contractive/dynamics.hpp"

#include "contractive/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace contractive {

namespace {

double positive_root(double v) { return std::sqrt(std::max(0.0, v)); }

} // namespace

void PhysicalScales::validate() const {
    auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!ok(hbar) || !ok(mass) || !ok(omega)) {
        throw Error(Errc::invalid_parameter, "hbar, mass and omega must be positive");
    }
}

std::string_view to_string(System s) noexcept {
    return s == System::oscillator ? "oscillator" : "free_mass";
}

System system_from_string(std::string_view s) {
    if (s == "oscillator" || s == "photon") {
        return System::oscillator;
    }
    if (s == "free_mass" || s == "free-mass") {
        return System::free_mass;
    }
    throw Error(Errc::invalid_parameter, "unknown system '" + std::string(s) + "'");
}

PhysicalMoments to_physical(const MomentSummary& s, const PhysicalScales& scales) {
    scales.validate();
    const double x_scale = scales.hbar / (scales.mass * scales.omega);
    const double p_scale = scales.mass * scales.hbar * scales.omega;
    return PhysicalMoments{s.var_x * x_scale, s.var_p * p_scale, s.cov * scales.hbar};
}

double oscillator_variance(const MomentSummary& s, double omega, double t) {
    const double c = std::cos(omega * t);
    const double sn = std::sin(omega * t);
    return c * c * s.var_x + sn * sn * s.var_p + 0.5 * std::sin(2.0 * omega * t) * s.cov;
}

double free_mass_variance(const MomentSummary& s, const PhysicalScales& scales, double t) {
    const PhysicalMoments m = to_physical(s, scales);
    const double tau = t / scales.mass;
    return m.var_X + tau * tau * m.var_P + tau * m.cov_XP;
}

double sgcs_free_mass_variance(double n_bar, SqueezeParams xi, const PhysicalScales& scales,
                               double t) {
    const MomentSummary q = sgcs_predicted_moments(n_bar, xi);
    const PhysicalMoments m = to_physical(q, scales);
    const double tau = t / scales.mass;
    return m.var_X + tau * tau * m.var_P +
           scales.hbar * tau * sgcs_covariance_from_variances(q.var_x, q.var_p, n_bar, xi.theta);
}

RqlBand rql_band(const MomentSummary& s, System system, const PhysicalScales& scales, double t) {
    if (system == System::oscillator) {
        const double w = scales.omega;
        const double c = std::cos(w * t);
        const double sn = std::sin(w * t);
        const double center = c * c * s.var_x + sn * sn * s.var_p;
        const double half =
            0.5 * std::abs(std::sin(2.0 * w * t)) * positive_root(4.0 * s.var_x * s.var_p - 1.0);
        return RqlBand{center - half, center + half};
    }
    const PhysicalMoments m = to_physical(s, scales);
    const double tau = t / scales.mass;
    const double center = m.var_X + tau * tau * m.var_P;
    const double half =
        std::abs(tau) * positive_root(4.0 * m.var_X * m.var_P - scales.hbar * scales.hbar);
    return RqlBand{center - half, center + half};
}

double sql_envelope(const MomentSummary& s, const PhysicalScales& scales, double t) {
    const PhysicalMoments m = to_physical(s, scales);
    const double tau = t / scales.mass;
    return std::max(m.var_X + tau * tau * m.var_P, scales.hbar * std::abs(tau));
}

EvolutionTrace evolve_oscillator(const MomentSummary& s, double omega,
                                 std::span<const double> times) {
    PhysicalScales scales;
    scales.omega = omega;
    scales.validate();
    EvolutionTrace tr;
    tr.system = System::oscillator;
    tr.times.assign(times.begin(), times.end());
    for (double t : times) {
        const RqlBand band = rql_band(s, System::oscillator, scales, t);
        tr.var_x_t.push_back(oscillator_variance(s, omega, t));
        tr.rql_lower.push_back(band.lower);
        tr.rql_upper.push_back(band.upper);
    }
    return tr;
}

EvolutionTrace evolve_free_mass(const MomentSummary& s, const PhysicalScales& scales,
                                std::span<const double> times) {
    scales.validate();
    EvolutionTrace tr;
    tr.system = System::free_mass;
    tr.times.assign(times.begin(), times.end());
    for (double t : times) {
        const RqlBand band = rql_band(s, System::free_mass, scales, t);
        tr.var_x_t.push_back(free_mass_variance(s, scales, t));
        tr.rql_lower.push_back(band.lower);
        tr.rql_upper.push_back(band.upper);
        tr.sql.push_back(sql_envelope(s, scales, t));
    }
    return tr;
}

ContractionWindow contraction_window(const MomentSummary& s, const PhysicalScales& scales) {
    if (!(s.cov < 0.0)) {
        throw Error(Errc::not_contractive,
                    "covariance " + std::to_string(s.cov) + " is not negative");
    }
    const PhysicalMoments m = to_physical(s, scales);
    ContractionWindow w;
    // var_X(t) - var_X(0) = (t/m)^2 var_P + (t/m) cov_XP vanishes again at t_M
    w.t_M = scales.mass * (-m.cov_XP) / m.var_P;
    w.t_min = 0.5 * w.t_M;
    w.var_at_min = m.var_X - m.cov_XP * m.cov_XP / (4.0 * m.var_P);
    return w;
}

FockVector evolve_state_free_mass(const FockVector& state, const PhysicalScales& scales, double t,
                                  const Tolerances& tol) {
    scales.validate();
    require_tail_safe(state, tol, "free-mass evolution (input)");
    const std::size_t band = occupied_band(state);
    const std::size_t dim = std::max(state.dim(), 4 * (band + 1));
    const FockVector padded = state.resized(dim);
    const LadderOperators ops = build_operators(dim);
    // P^2/(2m) t / hbar = omega t p^2 / 2 in quadrature units
    const OperatorMatrix gen = Complex(0.0, -0.5 * scales.omega * t) * (ops.p * ops.p);
    FockVector out(expm(gen) * padded.amplitudes());
    require_tail_safe(out, tol, "free-mass evolution (output)");
    return out;
}

MomentSummary schrodinger_oracle(const FockVector& state, System system,
                                 const PhysicalScales& scales, double t, const Tolerances& tol) {
    scales.validate();
    if (system == System::oscillator) {
        require_tail_safe(state, tol, "oscillator evolution");
        AmplitudeVector v = state.amplitudes();
        for (Eigen::Index m = 0; m < v.size(); ++m) {
            v(m) *= std::polar(1.0, -scales.omega * t * static_cast<double>(m));
        }
        return summarize(FockVector(std::move(v)), tol);
    }
    return summarize(evolve_state_free_mass(state, scales, t, tol), tol);
}

std::vector<double> linspace(double t0, double t1, std::size_t samples) {
    if (samples < 2) {
        throw Error(Errc::invalid_parameter, "need at least two samples");
    }
    std::vector<double> out(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        out[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
    return out;
}

} // namespace contractive
