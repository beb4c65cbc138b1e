#pragma once

#include "contractive/fock_core.hpp"
#include "contractive/state_factory.hpp"
#include "contractive/tolerances.hpp"

namespace contractive {

/// Second moments of the dimensionless quadratures. cov is the symmetrized
/// covariance <{dx, dp}> = <xp + px> - 2<x><p>.
struct MomentSummary {
    double var_x = 0.5;
    double var_p = 0.5;
    double cov = 0.0;
    double n_bar = 0.0;
    double uncertainty_product = 0.25; // var_x * var_p
};

struct StateClass {
    bool is_squeezed = false;    // var_x < var_p
    bool is_contractive = false; // cov < 0
    bool is_gcs = false;         // var_x = var_p and cov = 0
    bool is_extremal = false;    // cov^2 = 4 var_x var_p - 1
};

/// Requires a tail-safe state (throws truncation otherwise).
[[nodiscard]] MomentSummary summarize(const FockVector& state, const Tolerances& tol = {});

/// Builds a summary from variances and covariance; n_bar defaults to zero.
[[nodiscard]] MomentSummary make_summary(double var_x, double var_p, double cov, double n_bar = 0.0);

/// 4 var_x var_p - cov^2 - 1, nonnegative for every physical state.
[[nodiscard]] double robertson_margin(const MomentSummary& s);

/// Comparisons use tol scaled by the magnitude of the compared quantities
/// (never below tol itself).
[[nodiscard]] StateClass classify(const MomentSummary& s, double tol);
[[nodiscard]] inline StateClass classify(const MomentSummary& s, const Tolerances& tol = {}) {
    return classify(s, tol.classify);
}

/// Closed-form moments of S(xi)|phi> for a seed with mean photon number nbar:
///   var_x = (nbar + 1/2)(cosh 2r - cos(theta) sinh 2r)
///   var_p = (nbar + 1/2)(cosh 2r + cos(theta) sinh 2r)
///   cov   = -(2 nbar + 1) sin(theta) sinh 2r
/// The n_bar field holds <a^dag a> of S(xi)|phi> (no displacement):
/// (nbar + 1/2) cosh 2r - 1/2. With nbar = 0 these are the squeezed coherent formulas.
[[nodiscard]] MomentSummary sgcs_predicted_moments(double n_bar, SqueezeParams xi);

/// -sgn(sin theta) sqrt(4 var_x var_p - (2 nbar + 1)^2), the covariance written
/// through the variances.
[[nodiscard]] double sgcs_covariance_from_variances(double var_x, double var_p, double n_bar,
                                                    double theta);

} // namespace contractive
