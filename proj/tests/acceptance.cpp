// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "contractive/dynamics.hpp"
#include "contractive/error.hpp"
#include "contractive/gcs_solver.hpp"
#include "contractive/moments.hpp"
#include "contractive/state_factory.hpp"
#include "contractive/verify.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace contractive;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    double time_limit; // seconds, 0 = none
    std::function<Outcome()> body;
};

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

double seed_nbar(const FockVector& phi) {
    double nb = 0.0;
    for (std::size_t m = 0; m < phi.dim(); ++m) {
        nb += static_cast<double>(m) * std::norm(phi[m]);
    }
    return nb;
}

struct Closed {
    double var_x, var_p, cov;
};

// (nbar + 1/2)(cosh 2r -+ cos(theta) sinh 2r), -(2 nbar + 1) sin(theta) sinh 2r
Closed closed_form(double nbar, double r, double theta) {
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    return {(nbar + 0.5) * (c - std::cos(theta) * s), (nbar + 0.5) * (c + std::cos(theta) * s),
            -(2.0 * nbar + 1.0) * std::sin(theta) * s};
}

double moment_error(const MomentSummary& m, const Closed& c) {
    return std::max({std::abs(m.var_x - c.var_x), std::abs(m.var_p - c.var_p), std::abs(m.cov - c.cov)});
}

Complex random_alpha(std::mt19937_64& rng, double max_abs) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(max_abs * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

std::size_t random_support(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

PhiState random_solved_seed(std::mt19937_64& rng, std::size_t max_n, std::size_t max_N) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        const std::size_t n = static_cast<std::size_t>(rng() % (max_n + 1));
        const std::size_t N = n + 3 + static_cast<std::size_t>(rng() % (max_N - n - 2));
        PhiSpec spec{n, N, {}};
        for (std::size_t k = n + 1; k < N; ++k) {
            spec.free.emplace_back(g(rng), g(rng));
        }
        try {
            return solve_phi(spec);
        } catch (const Error& e) {
            if (e.code() != Errc::degenerate_spec) {
                throw;
            }
        }
    }
}

PhiState random_lattice_seed(std::mt19937_64& rng, std::size_t max_terms) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(1 + static_cast<std::size_t>(rng() % max_terms));
    for (double& x : w) {
        x = u(rng);
    }
    return lattice_phi(w);
}

double band_gap(const RqlBand& b, double v) { return std::min(v - b.lower, b.upper - v); }

// SCS moments, |alpha| <= 2, r <= 1, theta uniform, dim 256.
Outcome criterion1() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Complex a = random_alpha(rng, 2.0);
        const double r = ur(rng);
        const double th = ut(rng);
        const MomentSummary m = summarize(make_scs(Displacement{a}, SqueezeParams{r, th}, 256));
        worst = std::max(worst, moment_error(m, closed_form(0.0, r, th)));
    }
    return {worst < 1e-8, "200 states, max error " + sci(worst)};
}

// GCS widths stay at nbar + 1/2 over two oscillator periods.
Outcome criterion2() {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> un(0.2, 10.0);
    const std::vector<double> times = linspace(0.0, 4.0 * std::numbers::pi, 64);
    const PhysicalScales unit;
    double worst_analytic = 0.0;
    double worst_schrodinger = 0.0;
    double top_nbar = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PhiState phi = i % 2 == 0 ? lattice_phi_for_nbar(un(rng)) : random_solved_seed(rng, 4, 10);
        const double nb = seed_nbar(phi.state);
        top_nbar = std::max(top_nbar, nb);
        const FockVector psi = make_sgcs(Displacement{random_alpha(rng, 1.5)}, SqueezeParams{0.0, 0.0},
                                         phi.state, 128);
        const MomentSummary s = summarize(psi);
        for (const double t : times) {
            worst_analytic = std::max(worst_analytic, std::abs(oscillator_variance(s, 1.0, t) - (nb + 0.5)));
            worst_schrodinger = std::max(
                worst_schrodinger,
                std::abs(schrodinger_oracle(psi, System::oscillator, unit, t).var_x - (nb + 0.5)));
        }
    }
    const double worst = std::max(worst_analytic, worst_schrodinger);
    return {worst < 1e-8, "50 states x 64 times, nbar up to " + sci(top_nbar) + ", analytic " +
                              sci(worst_analytic) + ", schrodinger " + sci(worst_schrodinger)};
}

double dist_mod_phase(const AmplitudeVector& a, const AmplitudeVector& b) {
    const Complex ov = b.dot(a);
    const Complex ph = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
    return (a - ph * b).norm();
}

// Seed solver residuals, and agreement with the N = n+3 closed form.
Outcome criterion3() {
    std::mt19937_64 rng(303);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PhiState phi = random_solved_seed(rng, 4, 12);
        worst = std::max({worst, std::abs(oracle::ladder_moment(phi.state, 1)),
                          std::abs(oracle::ladder_moment(phi.state, 2))});
    }
    double worst_n3 = 0.0;
    int compared = 0;
    while (compared < 100) {
        const std::size_t n = static_cast<std::size_t>(rng() % 5);
        const Complex c1(g(rng), g(rng));
        const Complex c2(g(rng), g(rng));
        if (std::abs(std::norm(c1) - std::norm(c2)) < 1e-3) {
            continue;
        }
        const PhiState a = solve_phi(PhiSpec{n, n + 3, {c1, c2}});
        const PhiState b = solve_phi_n3(n, c1, c2, a.state.dim());
        worst_n3 = std::max({worst_n3, dist_mod_phase(a.state.amplitudes(), b.state.amplitudes()),
                             std::abs(a.n_bar - b.n_bar)});
        ++compared;
    }
    return {worst < 1e-10 && worst_n3 < 1e-12,
            "100 specs, max |<a>|,|<a^2>| " + sci(worst) + ", n+3 mismatch " + sci(worst_n3)};
}

// SGCS moments and the covariance written through the variances.
Outcome criterion4() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    double worst_identity = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PhiState phi = i % 2 == 0 ? random_lattice_seed(rng, 3) : random_solved_seed(rng, 2, 6);
        const double nb = seed_nbar(phi.state);
        const double r = ur(rng);
        const double th = ut(rng);
        const MomentSummary m =
            summarize(make_sgcs(Displacement{random_alpha(rng, 1.0)}, SqueezeParams{r, th}, phi.state, 256));
        worst = std::max(worst, moment_error(m, closed_form(nb, r, th)));
        const double arg = std::max(0.0, 4.0 * m.var_x * m.var_p - (2.0 * nb + 1.0) * (2.0 * nb + 1.0));
        const double sgn = std::sin(th) > 0.0 ? 1.0 : (std::sin(th) < 0.0 ? -1.0 : 0.0);
        worst_identity = std::max({worst_identity, std::abs(m.cov + sgn * std::sqrt(arg)),
                                   std::abs(m.cov - sgcs_covariance_from_variances(m.var_x, m.var_p, nb, th))});
    }
    return {worst < 1e-8 && worst_identity < 1e-8,
            "100 states, moments " + sci(worst) + ", covariance identity " + sci(worst_identity)};
}

// Band validity on random states, saturation and the audit on SCS only.
Outcome criterion5() {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> uth(-std::numbers::pi, std::numbers::pi);
    const PhysicalScales unit;
    int violations = 0;
    double worst_gap = std::numeric_limits<double>::infinity();
    double min_non_gaussian_residual = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 500; ++i) {
        const FockVector psi = oracle::random_state(rng, 128, random_support(rng, 2, 40));
        const MomentSummary s = summarize(psi);
        for (int k = 0; k < 20; ++k) {
            const double t = ut(rng);
            const double go = band_gap(rql_band(s, System::oscillator, unit, t), oscillator_variance(s, 1.0, t));
            const double gf = band_gap(rql_band(s, System::free_mass, unit, t), free_mass_variance(s, unit, t));
            worst_gap = std::min({worst_gap, go, gf});
            violations += (go < -1e-9) + (gf < -1e-9);
        }
        min_non_gaussian_residual = std::min(min_non_gaussian_residual, audit_extremal(psi).residual);
    }
    for (std::size_t n = 1; n < 20; ++n) {
        min_non_gaussian_residual = std::min(min_non_gaussian_residual, audit_extremal(number_state(n, 64)).residual);
    }
    double worst_touch = 0.0;
    double worst_scs_residual = 0.0;
    bool consistent = true;
    for (int i = 0; i < 100; ++i) {
        const FockVector scs = make_scs(Displacement{random_alpha(rng, 1.5)}, SqueezeParams{ur(rng), uth(rng)}, 192);
        const MomentSummary s = summarize(scs);
        for (int k = 0; k < 20; ++k) {
            const double t = ut(rng);
            worst_touch = std::max(
                {worst_touch,
                 std::abs(band_gap(rql_band(s, System::oscillator, unit, t), oscillator_variance(s, 1.0, t))),
                 std::abs(band_gap(rql_band(s, System::free_mass, unit, t), free_mass_variance(s, unit, t)))});
        }
        const ExtremalAudit audit = audit_extremal(scs);
        worst_scs_residual = std::max(worst_scs_residual, audit.residual);
        consistent = consistent && audit.cov_sign_consistent;
    }
    const bool pass = violations == 0 && worst_touch < 1e-7 && worst_scs_residual < 1e-7 && consistent &&
                      min_non_gaussian_residual >= 1e-7;
    return {pass, "violations " + std::to_string(violations) + " (worst gap " + sci(worst_gap) + "), SCS touch " +
                      sci(worst_touch) + ", SCS audit " + sci(worst_scs_residual) + ", non-Gaussian audit >= " +
                      sci(min_non_gaussian_residual)};
}

// Contraction of the extremal state with var_X = var_P = 1.
Outcome criterion6() {
    const PhysicalScales unit;
    const double t_M = std::sqrt(3.0);
    const double t_min = 0.5 * t_M;
    double analytic = 0.0;
    const auto check_summary = [&](const MomentSummary& s) {
        const ContractionWindow w = contraction_window(s, unit);
        analytic = std::max({analytic, std::abs(w.t_M - t_M), std::abs(w.t_min - t_min),
                             std::abs(w.var_at_min - 0.25), std::abs(free_mass_variance(s, unit, t_min) - 0.25),
                             std::abs(free_mass_variance(s, unit, t_M) - 1.0)});
        for (const double d : {0.1, 0.3, 0.6, t_min}) {
            analytic = std::max(analytic, std::abs(free_mass_variance(s, unit, t_min - d) -
                                                   free_mass_variance(s, unit, t_min + d)));
        }
    };
    check_summary(make_summary(1.0, 1.0, -std::sqrt(3.0)));
    const FockVector psi =
        extremal_fock_state(ExtremalLambda::from_moments(1.0, 1.0, -std::sqrt(3.0)), 0.0, 0.0, 128);
    check_summary(summarize(psi));

    double schrodinger = 0.0;
    const double v_min = schrodinger_oracle(psi, System::free_mass, unit, t_min).var_x;
    const double v_back = schrodinger_oracle(psi, System::free_mass, unit, t_M).var_x;
    schrodinger = std::max({std::abs(v_min - 0.25), std::abs(v_back - 1.0)});
    bool is_minimum = true;
    for (const double d : {0.05, 0.2}) {
        const double lo = schrodinger_oracle(psi, System::free_mass, unit, t_min - d).var_x;
        const double hi = schrodinger_oracle(psi, System::free_mass, unit, t_min + d).var_x;
        is_minimum = is_minimum && lo > v_min && hi > v_min;
        schrodinger = std::max(schrodinger, std::abs(lo - hi));
    }
    return {analytic < 1e-10 && schrodinger < 1e-4 && is_minimum,
            "analytic " + sci(analytic) + ", schrodinger " + sci(schrodinger) +
                (is_minimum ? ", minimum at sqrt(3)/2" : ", minimum misplaced")};
}

// Minimum variance far below hbar t / m for large uncertainty products.
Outcome criterion7() {
    const PhysicalScales unit;
    bool pass = true;
    std::ostringstream detail;
    for (const double k : {5.0, 10.0, 50.0}) {
        const MomentSummary s = make_summary(k, k, -std::sqrt(4.0 * k * k - 1.0));
        const double t = unit.mass * k / s.var_p;
        const double v = free_mass_variance(s, unit, t);
        const double ratio = v * 4.0 * unit.mass * k / (t * unit.hbar * unit.hbar);
        pass = pass && ratio >= 1.0 && ratio <= 1.0 + 10.0 / (k * k);
        detail << "k=" << k << " ratio " << std::setprecision(8) << ratio << " var/sql " << sci(v / (unit.hbar * t / unit.mass))
               << "; ";
    }
    // k = 5 from an actual Fock-space state
    const double k = 5.0;
    const FockVector psi =
        extremal_fock_state(ExtremalLambda::from_moments(k, k, -std::sqrt(4.0 * k * k - 1.0)), 0.0, 0.0, 256);
    const MomentSummary s = summarize(psi);
    const double t = k / s.var_p;
    const double ratio = free_mass_variance(s, unit, t) * 4.0 * k / t;
    pass = pass && ratio >= 1.0 - 1e-9 && ratio <= 1.0 + 10.0 / (k * k);
    detail << "k=5 state ratio " << std::setprecision(8) << ratio;
    return {pass, detail.str()};
}

// Overcompleteness of the displaced squeezed (|0> + |3>)/sqrt(2) family.
Outcome criterion8() {
    const double w[] = {1.0, 1.0};
    const PhiState phi = lattice_phi(w);
    const SqueezeParams xi{0.3, 0.0};
    const auto run = [&](std::uint64_t budget, std::uint64_t seed) {
        OvercompletenessOptions o;
        o.budget = budget;
        o.seed = seed;
        return check_overcompleteness(xi, phi, 6, o);
    };
    const std::uint64_t budgets[] = {250'000, 1'000'000, 4'000'000};
    double mean_rms[3] = {0.0, 0.0, 0.0};
    double max_dev = 0.0;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        for (int b = 0; b < 3; ++b) {
            const OvercompletenessReport rep = run(budgets[b], seed);
            mean_rms[b] += 0.25 * rep.rms_deviation;
            if (seed == 0 && b == 1) {
                max_dev = rep.max_abs_deviation;
            }
        }
    }
    const double r1 = mean_rms[1] / mean_rms[0];
    const double r2 = mean_rms[2] / mean_rms[1];
    const bool pass = max_dev < 5e-3 && r1 >= 0.35 && r1 <= 0.65 && r2 >= 0.35 && r2 <= 0.65;
    std::ostringstream detail;
    detail << "1e6 samples max deviation " << sci(max_dev) << ", rms ratio x4 budget " << std::fixed
           << std::setprecision(3) << r1 << " and " << r2;
    return {pass, detail.str()};
}

// Analytic propagation against full state evolution.
Outcome criterion9() {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    std::uniform_real_distribution<double> ur(0.0, 0.8);
    std::uniform_real_distribution<double> uth(-std::numbers::pi, std::numbers::pi);
    const PhysicalScales unit;
    double osc = 0.0;
    for (int i = 0; i < 32; ++i) {
        FockVector psi = i % 2 == 0
                             ? oracle::random_state(rng, 128, random_support(rng, 1, 40))
                             : make_sgcs(Displacement{random_alpha(rng, 1.0)}, SqueezeParams{ur(rng), uth(rng)},
                                         random_lattice_seed(rng, 2).state, 128);
        const MomentSummary s = summarize(psi);
        for (int k = 0; k < 32; ++k) {
            const double t = ut(rng);
            osc = std::max(osc, std::abs(schrodinger_oracle(psi, System::oscillator, unit, t).var_x -
                                         oscillator_variance(s, 1.0, t)));
        }
    }
    double free = 0.0;
    std::uniform_real_distribution<double> uf(0.0, 1.5);
    std::uniform_real_distribution<double> urf(0.0, 0.6);
    for (int i = 0; i < 8; ++i) {
        const FockVector psi = make_scs(Displacement{random_alpha(rng, 1.0)}, SqueezeParams{urf(rng), uth(rng)}, 64);
        const MomentSummary s = summarize(psi);
        for (int k = 0; k < 4; ++k) {
            const double t = uf(rng);
            free = std::max(free, std::abs(schrodinger_oracle(psi, System::free_mass, unit, t).var_x -
                                           free_mass_variance(s, unit, t)));
        }
    }
    return {osc < 1e-6 && free < 1e-4,
            "oscillator 32x32 " + sci(osc) + ", free mass 8 Gaussian states " + sci(free)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, 30.0, criterion1}, {2, 10.0, criterion2}, {3, 0.0, criterion3},
        {4, 0.0, criterion4},  {5, 0.0, criterion5},  {6, 0.0, criterion6},
        {7, 0.0, criterion7},  {8, 120.0, criterion8}, {9, 0.0, criterion9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.time_limit <= 0.0 || secs < c.time_limit;
        const bool pass = out.pass && in_time;
        failures += pass ? 0 : 1;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " " << out.detail << " ("
                  << std::fixed << std::setprecision(1) << secs << " s";
        if (c.time_limit > 0.0) {
            std::cout << ", limit " << c.time_limit << " s";
        }
        std::cout << ")" << std::defaultfloat << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
