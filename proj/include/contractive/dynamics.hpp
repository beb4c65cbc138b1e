#pragma once

// Variance propagation for a single oscillator mode and for a free mass.
//
// Oscillator (dimensionless quadratures, H = omega a^dag a):
//   var_x(t) = cos^2(wt) var_x + sin^2(wt) var_p + sin(2wt) cov / 2
//   |var_x(t) - cos^2 var_x - sin^2 var_p| <= |sin 2wt| sqrt(4 var_x var_p - 1) / 2
//
// Free mass (physical X = x sqrt(hbar/(m w)), P = p sqrt(m hbar w), H = P^2/2m):
//   var_X(t) = var_X + (t/m)^2 var_P + (t/m) cov_XP
//   |var_X(t) - var_X - (t/m)^2 var_P| <= (t/m) sqrt(4 var_X var_P - hbar^2)

#include "contractive/fock_core.hpp"
#include "contractive/moments.hpp"
#include "contractive/state_factory.hpp"
#include "contractive/tolerances.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace contractive {

struct PhysicalScales {
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 1.0;

    /// Throws invalid_parameter unless all three are positive and finite.
    void validate() const;
};

enum class System { oscillator, free_mass };

[[nodiscard]] std::string_view to_string(System s) noexcept;
[[nodiscard]] System system_from_string(std::string_view s);

/// Moments of the physical X, P for a free mass.
struct PhysicalMoments {
    double var_X = 0.0;
    double var_P = 0.0;
    double cov_XP = 0.0;
};

[[nodiscard]] PhysicalMoments to_physical(const MomentSummary& s, const PhysicalScales& scales);

struct EvolutionTrace {
    System system = System::oscillator;
    std::vector<double> times;
    std::vector<double> var_x_t;
    std::vector<double> rql_lower;
    std::vector<double> rql_upper;
    std::vector<double> sql; // free mass only; empty for the oscillator
};

struct RqlBand {
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] double center() const { return 0.5 * (lower + upper); }
    [[nodiscard]] double half_width() const { return 0.5 * (upper - lower); }
};

struct ContractionWindow {
    double t_M = 0.0;        // variance back at its initial value
    double t_min = 0.0;      // t_M / 2, the vertex of the quadratic
    double var_at_min = 0.0; // physical var_X at t_min
};

[[nodiscard]] double oscillator_variance(const MomentSummary& s, double omega, double t);
[[nodiscard]] double free_mass_variance(const MomentSummary& s, const PhysicalScales& scales, double t);

/// Free-mass variance of an SGCS written through the seed's nbar:
/// var_X + (t/m)^2 var_P - (hbar t/m) sgn(sin theta) sqrt(4 var_x var_p - (2 nbar + 1)^2)
[[nodiscard]] double sgcs_free_mass_variance(double n_bar, SqueezeParams xi,
                                             const PhysicalScales& scales, double t);

/// The RQL band at time t (oscillator uses scales.omega only).
[[nodiscard]] RqlBand rql_band(const MomentSummary& s, System system, const PhysicalScales& scales,
                               double t);

/// max(var_X + (t/m)^2 var_P, hbar |t| / m)
[[nodiscard]] double sql_envelope(const MomentSummary& s, const PhysicalScales& scales, double t);

[[nodiscard]] EvolutionTrace evolve_oscillator(const MomentSummary& s, double omega,
                                               std::span<const double> times);
[[nodiscard]] EvolutionTrace evolve_free_mass(const MomentSummary& s, const PhysicalScales& scales,
                                              std::span<const double> times);

/// Throws not_contractive when cov >= 0. Returns t_M = m |cov_XP| / var_P, which
/// equals (m / var_P) sqrt(4 var_X var_P - hbar^2) for saturating states.
[[nodiscard]] ContractionWindow contraction_window(const MomentSummary& s,
                                                   const PhysicalScales& scales);

/// Evolves the full state vector and summarizes it (dimensionless units).
/// Oscillator: c_m -> exp(-i omega t m) c_m. Free mass: exp(-i omega t p^2 / 2)
/// on a cutoff at least four times the occupied band; the evolved state must
/// stay tail-safe.
[[nodiscard]] MomentSummary schrodinger_oracle(const FockVector& state, System system,
                                               const PhysicalScales& scales, double t,
                                               const Tolerances& tol = {});

/// Same free-mass evolution, returning the evolved state.
[[nodiscard]] FockVector evolve_state_free_mass(const FockVector& state, const PhysicalScales& scales,
                                                double t, const Tolerances& tol = {});

[[nodiscard]] std::vector<double> linspace(double t0, double t1, std::size_t samples);

} // namespace contractive
