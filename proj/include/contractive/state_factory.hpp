#pragma once

// Named state families built in a truncated Fock space: number states,
// displaced and squeezed states (SCS = D(alpha) S(xi)|0>), squeezed generic
// coherent states D(alpha) S(xi)|phi>, plus position-space wavefunctions.

#include "contractive/fock_core.hpp"
#include "contractive/tolerances.hpp"

#include <complex>
#include <span>
#include <vector>

namespace contractive {

/// Squeeze xi = r e^{i theta}; mu = cosh r, nu = e^{i theta} sinh r.
struct SqueezeParams {
    double r = 0.0;
    double theta = 0.0;

    [[nodiscard]] double mu() const;
    [[nodiscard]] Complex nu() const;
    [[nodiscard]] Complex xi() const;
};

struct Displacement {
    Complex alpha{0.0, 0.0};

    [[nodiscard]] double alpha1() const { return alpha.real(); }
    [[nodiscard]] double alpha2() const { return alpha.imag(); }
};

/// Parameter of the saturating Gaussian exp(-lambda (x - <x>)^2 / 2); Re lambda > 0.
class ExtremalLambda {
public:
    explicit ExtremalLambda(Complex lambda);

    /// Re lambda = 1/(2 var_x), |Im lambda| = sqrt(4 var_x var_p - 1)/(2 var_x),
    /// sign(Im lambda) = -sign(cov).
    [[nodiscard]] static ExtremalLambda from_moments(double var_x, double var_p, double cov);

    [[nodiscard]] Complex value() const noexcept { return lambda_; }

private:
    Complex lambda_;
};

[[nodiscard]] FockVector number_state(std::size_t n, std::size_t dim);

/// The generator alpha a^dag - alpha* a and the squeeze generator
/// (xi* a^2 - xi a^dag^2)/2 as dense matrices.
[[nodiscard]] OperatorMatrix displacement_generator(Displacement alpha, std::size_t dim);
[[nodiscard]] OperatorMatrix squeeze_generator(SqueezeParams xi, std::size_t dim);

[[nodiscard]] OperatorMatrix displacement_operator(Displacement alpha, std::size_t dim);
[[nodiscard]] OperatorMatrix squeeze_operator(SqueezeParams xi, std::size_t dim);

/// D(alpha)|state>. Input and output must be tail-safe.
[[nodiscard]] FockVector displace(const FockVector& state, Displacement alpha,
                                  const Tolerances& tol = {});

/// S(xi)|state>. Input and output must be tail-safe.
[[nodiscard]] FockVector squeeze(const FockVector& state, SqueezeParams xi,
                                 const Tolerances& tol = {});

[[nodiscard]] FockVector make_coherent(Displacement alpha, std::size_t dim,
                                       const Tolerances& tol = {});

/// Displaced number state D(alpha)|n>.
[[nodiscard]] FockVector make_displaced_number(Displacement alpha, std::size_t n,
                                               std::size_t dim, const Tolerances& tol = {});

/// Squeezed coherent state D(alpha) S(xi)|0>.
[[nodiscard]] FockVector make_scs(Displacement alpha, SqueezeParams xi, std::size_t dim,
                                  const Tolerances& tol = {});

/// D(alpha) S(xi)|phi>. phi must satisfy <a> = <a^2> = 0 within tol.gcs_check,
/// otherwise throws precondition. The result lives in phi's dimension.
[[nodiscard]] FockVector make_sgcs(Displacement alpha, SqueezeParams xi, const FockVector& phi,
                                   const Tolerances& tol = {});

/// Same, with phi first embedded in `dim` levels.
[[nodiscard]] FockVector make_sgcs(Displacement alpha, SqueezeParams xi, const FockVector& phi,
                                   std::size_t dim, const Tolerances& tol = {});

/// 2048 points over [-12, 12].
[[nodiscard]] std::vector<double> default_grid();
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// psi(x) = sum_m c_m <x|m> with Hermite functions from the three-term recurrence.
[[nodiscard]] std::vector<Complex> wavefunction(const FockVector& state, std::span<const double> grid);

/// (Re lambda / pi)^{1/4} exp(i mean_p x - lambda (x - mean_x)^2 / 2) on the grid.
[[nodiscard]] std::vector<Complex> extremal_state(ExtremalLambda lambda, double mean_x,
                                                  double mean_p, std::span<const double> grid);

/// The same saturating state in the Fock basis, built as D(alpha) S(xi)|0> with
/// tanh(r) e^{i theta} = (lambda - 1)/(lambda + 1) and alpha = (mean_x + i mean_p)/sqrt(2).
/// Agrees with extremal_state up to a global phase.
[[nodiscard]] FockVector extremal_fock_state(ExtremalLambda lambda, double mean_x, double mean_p,
                                             std::size_t dim, const Tolerances& tol = {});

/// Squeeze parameters whose vacuum wavefunction is exp(-lambda x^2 / 2).
[[nodiscard]] SqueezeParams squeeze_for_lambda(ExtremalLambda lambda);

/// Overlaps <m|psi> for m < dim of a grid wavefunction (trapezoid rule).
[[nodiscard]] AmplitudeVector project_to_fock(std::span<const Complex> psi,
                                              std::span<const double> grid, std::size_t dim);

/// Trapezoid integral of |psi|^2.
[[nodiscard]] double grid_norm_squared(std::span<const Complex> psi, std::span<const double> grid);

} // namespace contractive
