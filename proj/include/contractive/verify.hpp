#pragma once

// Structural checks that span state families: resolution of the identity by
// displaced squeezed seeds, the displacement/squeeze conjugation identities,
// and the saturation (complex Gaussian) audit.

#include "contractive/fock_core.hpp"
#include "contractive/gcs_solver.hpp"
#include "contractive/state_factory.hpp"
#include "contractive/tolerances.hpp"

#include <cstdint>
#include <string_view>

namespace contractive {

enum class IntegrationMethod { monte_carlo, grid };

[[nodiscard]] std::string_view to_string(IntegrationMethod m) noexcept;

struct OvercompletenessReport {
    IntegrationMethod method = IntegrationMethod::monte_carlo;
    std::size_t probe_dim = 0;
    double max_abs_deviation = 0.0;
    double rms_deviation = 0.0;
    std::uint64_t budget = 0;   // samples, or total grid points
    std::uint64_t seed = 0;     // monte carlo only
    std::size_t radial_nodes = 0;
    std::size_t angular_nodes = 0;
    double radius = 0.0;        // integration disk radius
    std::size_t state_dim = 0;  // cutoff used for S(xi)|phi>
};

struct OvercompletenessOptions {
    IntegrationMethod method = IntegrationMethod::monte_carlo;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    /// Worker threads for the Monte Carlo blocks; results do not depend on it.
    unsigned workers = 1;
};

/// Integrates (1/pi) d^2alpha D(alpha)|chi><chi|D(alpha)^dag, chi = S(xi)|phi>,
/// over a disk and reports the elementwise deviation from the identity on the
/// leading probe_dim x probe_dim Fock block. A small budget lowers accuracy
/// but never throws.
[[nodiscard]] OvercompletenessReport check_overcompleteness(SqueezeParams xi, const PhiState& phi,
                                                            std::size_t probe_dim,
                                                            const OvercompletenessOptions& opts = {},
                                                            const Tolerances& tol = {});

/// Leading `count` amplitudes of D(alpha)|chi>, from the normal-ordered form
/// e^{-|alpha|^2/2} e^{alpha a^dag} e^{-alpha* a}. Exact for any chi (no cutoff
/// on the displaced side).
[[nodiscard]] AmplitudeVector displaced_head(const FockVector& chi, Complex alpha, std::size_t count);

struct IdentityResiduals {
    std::size_t safe_block = 0;
    double displacement = 0.0;            // D^dag a D - (a + alpha)
    double bogoliubov_displacement = 0.0; // D(beta,b)^dag b D(beta,b) - (b + beta)
    double squeeze = 0.0;                 // S a S^dag - (mu a + nu a^dag)
    double d_beta_vs_d_alpha = 0.0;       // D(beta,b) - D(alpha,a)
};

/// Frobenius-norm residuals on the leading block whose basis vectors stay
/// clear of the cutoff under every operator involved (leak into the tail band
/// <= 1e-10), or on the leading `block` rows/columns when block > 0. dim >= 32.
[[nodiscard]] IdentityResiduals check_conjugation_identities(std::size_t dim, Displacement alpha,
                                                             SqueezeParams xi, std::size_t block = 0);

struct ExtremalAudit {
    Complex lambda_fit{1.0, 0.0};
    double residual = 0.0;            // ||(dp - i lambda dx)|psi>||
    bool cov_sign_consistent = false; // cov = -sgn(Im lambda) sqrt(4 var_x var_p - 1)
};

[[nodiscard]] ExtremalAudit audit_extremal(const FockVector& state, const Tolerances& tol = {});

} // namespace contractive
