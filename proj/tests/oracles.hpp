#pragma once

// Independent reference values for the unit and acceptance suites. Nothing
// here calls the matrix-exponential path of the library.

#include "contractive/fock_core.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using contractive::AmplitudeVector;
using contractive::Complex;
using contractive::FockVector;

/// e^{-|alpha|^2/2} alpha^m / sqrt(m!), by the ratio recursion.
inline AmplitudeVector coherent_amplitudes(Complex alpha, std::size_t dim) {
    AmplitudeVector c(static_cast<Eigen::Index>(dim));
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (std::size_t m = 1; m < dim; ++m) {
        c(static_cast<Eigen::Index>(m)) = c(static_cast<Eigen::Index>(m - 1)) * alpha /
                                          std::sqrt(static_cast<double>(m));
    }
    return c;
}

/// S(xi)|0> = cosh(r)^{-1/2} sum_k (-e^{i theta} tanh r)^k sqrt((2k)!)/(2^k k!) |2k>.
inline AmplitudeVector squeezed_vacuum_amplitudes(double r, double theta, std::size_t dim) {
    AmplitudeVector c = AmplitudeVector::Zero(static_cast<Eigen::Index>(dim));
    const Complex ratio = -std::polar(std::tanh(r), theta);
    c(0) = 1.0 / std::sqrt(std::cosh(r));
    for (std::size_t m = 2; m < dim; m += 2) {
        const double dm = static_cast<double>(m);
        c(static_cast<Eigen::Index>(m)) =
            c(static_cast<Eigen::Index>(m - 2)) * ratio * std::sqrt(dm * (dm - 1.0)) / dm;
    }
    return c;
}

/// Physicists' Hermite polynomial from the explicit finite sum.
inline double hermite_explicit(int n, double x) {
    double s = 0.0;
    for (int m = 0; 2 * m <= n; ++m) {
        s += (m % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * x, n - 2 * m) /
             (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1.0));
    }
    return std::tgamma(n + 1.0) * s;
}

/// <x|S(xi)|n> for theta = 0: H_n(x/s) exp(-x^2/(2 s^2)) / sqrt(s h_n),
/// s = mu - nu = e^{-r}, h_n = sqrt(pi) 2^n n!.
inline double squeezed_number_wavefunction(int n, double r, double x) {
    const double s = std::cosh(r) - std::sinh(r);
    const double lambda = (std::cosh(r) + std::sinh(r)) / s;
    const double hn = std::sqrt(M_PI) * std::pow(2.0, n) * std::tgamma(n + 1.0);
    return hermite_explicit(n, x / s) * std::exp(-0.5 * lambda * x * x) / std::sqrt(s * hn);
}

/// Random normalized state with support on the first `support` levels.
inline FockVector random_state(std::mt19937_64& rng, std::size_t dim, std::size_t support) {
    std::normal_distribution<double> g(0.0, 1.0);
    AmplitudeVector v = AmplitudeVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < support; ++m) {
        v(static_cast<Eigen::Index>(m)) = Complex(g(rng), g(rng));
    }
    return FockVector(v).normalized();
}

/// <phi|a^k|phi> by an explicit double loop over matrix elements.
inline Complex ladder_moment(const FockVector& phi, int k) {
    Complex s{0.0, 0.0};
    const auto d = phi.dim();
    for (std::size_t m = 0; m + k < d; ++m) {
        double f = 1.0;
        for (int j = 1; j <= k; ++j) {
            f *= std::sqrt(static_cast<double>(m + j));
        }
        s += std::conj(phi[m]) * phi[m + k] * f;
    }
    return s;
}

} // namespace oracle
