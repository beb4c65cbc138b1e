#include "contractive/state_factory.hpp"

#include "contractive/error.hpp"
#include "contractive/gcs_solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace contractive {

namespace {

using Index = Eigen::Index;

OperatorMatrix lowering_squared(std::size_t dim) {
    const auto d = static_cast<Index>(dim);
    OperatorMatrix a2 = OperatorMatrix::Zero(d, d);
    for (Index m = 0; m + 2 < d; ++m) {
        const auto dm = static_cast<double>(m);
        a2(m, m + 2) = std::sqrt((dm + 1.0) * (dm + 2.0));
    }
    return a2;
}

// |alpha| (a^dag - a); D(alpha) is its exponential conjugated by phases arg(alpha).
Eigen::MatrixXd real_displacement_generator(double rho, std::size_t dim) {
    const auto d = static_cast<Index>(dim);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    for (Index m = 1; m < d; ++m) {
        const double v = rho * std::sqrt(static_cast<double>(m));
        g(m, m - 1) = v;
        g(m - 1, m) = -v;
    }
    return g;
}

// r (a^2 - a^dag^2) / 2; S(xi) is its exponential conjugated by phases theta/2.
Eigen::MatrixXd real_squeeze_generator(double r, std::size_t dim) {
    const auto d = static_cast<Index>(dim);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    for (Index m = 0; m + 2 < d; ++m) {
        const auto dm = static_cast<double>(m);
        const double v = 0.5 * r * std::sqrt((dm + 1.0) * (dm + 2.0));
        g(m, m + 2) = v;
        g(m + 2, m) = -v;
    }
    return g;
}

FockVector apply_unitary(const OperatorMatrix& unitary, const FockVector& state,
                         const Tolerances& tol, std::string_view what) {
    require_tail_safe(state, tol, what);
    FockVector out(unitary * state.amplitudes());
    require_tail_safe(out, tol, what);
    return out;
}

// Normalized Hermite functions h_0..h_{count-1} at x, written into out.
void hermite_functions(double x, std::size_t count, std::vector<double>& out) {
    out.assign(count, 0.0);
    if (count == 0) {
        return;
    }
    out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (count > 1) {
        out[1] = std::sqrt(2.0) * x * out[0];
    }
    for (std::size_t n = 1; n + 1 < count; ++n) {
        const auto dn = static_cast<double>(n);
        out[n + 1] = std::sqrt(2.0 / (dn + 1.0)) * x * out[n] - std::sqrt(dn / (dn + 1.0)) * out[n - 1];
    }
}

std::vector<double> trapezoid_weights(std::span<const double> grid) {
    std::vector<double> w(grid.size(), 0.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double h = 0.5 * (grid[i + 1] - grid[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

} // namespace

double SqueezeParams::mu() const { return std::cosh(r); }

Complex SqueezeParams::nu() const { return std::polar(std::sinh(r), theta); }

Complex SqueezeParams::xi() const { return std::polar(r, theta); }

ExtremalLambda::ExtremalLambda(Complex lambda) : lambda_(lambda) {
    if (!(lambda.real() > 0.0) || !std::isfinite(lambda.imag())) {
        std::ostringstream os;
        os << "Re lambda must be > 0, got " << lambda;
        throw Error(Errc::invalid_parameter, os.str());
    }
}

ExtremalLambda ExtremalLambda::from_moments(double var_x, double var_p, double cov) {
    if (!(var_x > 0.0) || !(var_p > 0.0)) {
        throw Error(Errc::invalid_state, "variances must be positive");
    }
    const double re = 1.0 / (2.0 * var_x);
    const double im_abs = std::sqrt(std::max(0.0, 4.0 * var_x * var_p - 1.0)) / (2.0 * var_x);
    const double sign = cov > 0.0 ? -1.0 : (cov < 0.0 ? 1.0 : 0.0);
    return ExtremalLambda(Complex(re, sign * im_abs));
}

FockVector number_state(std::size_t n, std::size_t dim) {
    if (dim < 2) {
        throw Error(Errc::invalid_dimension, "dim must be >= 2");
    }
    if (n >= dim) {
        throw Error(Errc::out_of_range,
                    "number state |" + std::to_string(n) + "> needs dim > " + std::to_string(n));
    }
    AmplitudeVector v = AmplitudeVector::Zero(static_cast<Index>(dim));
    v(static_cast<Index>(n)) = 1.0;
    return FockVector(std::move(v));
}

OperatorMatrix displacement_generator(Displacement alpha, std::size_t dim) {
    const LadderOperators ops = build_operators(dim);
    return alpha.alpha * ops.adag - std::conj(alpha.alpha) * ops.a;
}

OperatorMatrix squeeze_generator(SqueezeParams xi, std::size_t dim) {
    const OperatorMatrix a2 = lowering_squared(dim);
    const Complex z = xi.xi();
    return 0.5 * (std::conj(z) * a2 - z * a2.adjoint());
}

OperatorMatrix displacement_operator(Displacement alpha, std::size_t dim) {
    return expm_phase_conjugated(real_displacement_generator(std::abs(alpha.alpha), dim),
                                 std::arg(alpha.alpha));
}

OperatorMatrix squeeze_operator(SqueezeParams xi, std::size_t dim) {
    return expm_phase_conjugated(real_squeeze_generator(xi.r, dim), 0.5 * xi.theta);
}

FockVector displace(const FockVector& state, Displacement alpha, const Tolerances& tol) {
    return apply_unitary(displacement_operator(alpha, state.dim()), state, tol, "displace");
}

FockVector squeeze(const FockVector& state, SqueezeParams xi, const Tolerances& tol) {
    return apply_unitary(squeeze_operator(xi, state.dim()), state, tol, "squeeze");
}

FockVector make_coherent(Displacement alpha, std::size_t dim, const Tolerances& tol) {
    return displace(number_state(0, dim), alpha, tol);
}

FockVector make_displaced_number(Displacement alpha, std::size_t n, std::size_t dim,
                                 const Tolerances& tol) {
    return displace(number_state(n, dim), alpha, tol);
}

FockVector make_scs(Displacement alpha, SqueezeParams xi, std::size_t dim, const Tolerances& tol) {
    return displace(squeeze(number_state(0, dim), xi, tol), alpha, tol);
}

FockVector make_sgcs(Displacement alpha, SqueezeParams xi, const FockVector& phi,
                     const Tolerances& tol) {
    const PhiCheck check = check_phi(phi, tol.gcs_check);
    if (!check.ok) {
        std::ostringstream os;
        os << "phi is not a generic-coherent seed: |<a>| = " << check.residual_a
           << ", |<a^2>| = " << check.residual_a2;
        throw Error(Errc::precondition, os.str());
    }
    return displace(squeeze(phi, xi, tol), alpha, tol);
}

FockVector make_sgcs(Displacement alpha, SqueezeParams xi, const FockVector& phi, std::size_t dim,
                     const Tolerances& tol) {
    return make_sgcs(alpha, xi, phi.resized(dim), tol);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(hi > lo)) {
        throw Error(Errc::invalid_parameter, "grid needs >= 2 points and hi > lo");
    }
    std::vector<double> g(points);
    const double h = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = lo + h * static_cast<double>(i);
    }
    return g;
}

std::vector<double> default_grid() { return uniform_grid(-12.0, 12.0, 2048); }

std::vector<Complex> wavefunction(const FockVector& state, std::span<const double> grid) {
    const std::size_t count = occupied_band(state, 0.0) + 1;
    const AmplitudeVector& c = state.amplitudes();
    std::vector<Complex> psi(grid.size());
    std::vector<double> h;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        hermite_functions(grid[i], count, h);
        Complex s{0.0, 0.0};
        for (std::size_t m = 0; m < count; ++m) {
            s += c(static_cast<Index>(m)) * h[m];
        }
        psi[i] = s;
    }
    return psi;
}

std::vector<Complex> extremal_state(ExtremalLambda lambda, double mean_x, double mean_p,
                                    std::span<const double> grid) {
    const Complex l = lambda.value();
    const double amp = std::pow(l.real() / std::numbers::pi, 0.25);
    std::vector<Complex> psi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dx = grid[i] - mean_x;
        psi[i] = amp * std::exp(Complex(0.0, mean_p * grid[i]) - 0.5 * l * dx * dx);
    }
    return psi;
}

SqueezeParams squeeze_for_lambda(ExtremalLambda lambda) {
    // b = mu a + nu a^dag annihilates exp(-lambda x^2/2) iff lambda = (mu+nu)/(mu-nu)
    const Complex l = lambda.value();
    const Complex z = (l - 1.0) / (l + 1.0); // nu/mu = tanh(r) e^{i theta}
    const double t = std::abs(z);
    SqueezeParams xi;
    xi.r = std::atanh(t);
    xi.theta = t > 0.0 ? std::arg(z) : 0.0;
    return xi;
}

FockVector extremal_fock_state(ExtremalLambda lambda, double mean_x, double mean_p,
                               std::size_t dim, const Tolerances& tol) {
    const Displacement alpha{Complex(mean_x, mean_p) / std::sqrt(2.0)};
    return make_scs(alpha, squeeze_for_lambda(lambda), dim, tol);
}

AmplitudeVector project_to_fock(std::span<const Complex> psi, std::span<const double> grid,
                                std::size_t dim) {
    if (psi.size() != grid.size()) {
        throw Error(Errc::shape_mismatch, "wavefunction and grid sizes differ");
    }
    const std::vector<double> w = trapezoid_weights(grid);
    AmplitudeVector out = AmplitudeVector::Zero(static_cast<Index>(dim));
    std::vector<double> h;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        hermite_functions(grid[i], dim, h);
        const Complex f = w[i] * psi[i];
        for (std::size_t m = 0; m < dim; ++m) {
            out(static_cast<Index>(m)) += h[m] * f;
        }
    }
    return out;
}

double grid_norm_squared(std::span<const Complex> psi, std::span<const double> grid) {
    if (psi.size() != grid.size()) {
        throw Error(Errc::shape_mismatch, "wavefunction and grid sizes differ");
    }
    const std::vector<double> w = trapezoid_weights(grid);
    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        s += w[i] * std::norm(psi[i]);
    }
    return s;
}

} // namespace contractive
