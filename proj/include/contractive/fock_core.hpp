#pragma once

// Truncated single-mode Fock space: state vectors, ladder/quadrature
// operators, expectation values and cutoff diagnostics.
//
// Units: hbar = 1, dimensionless quadratures a = (x + i p)/sqrt(2).

#include "contractive/tolerances.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string_view>

namespace contractive {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using AmplitudeVector = Eigen::VectorXcd;

/// Amplitudes over the number states |0>, ..., |D-1>. Immutable.
class FockVector {
public:
    /// Takes the amplitudes as given; throws invalid_dimension when D < 2.
    explicit FockVector(AmplitudeVector amplitudes);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] const AmplitudeVector& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t m) const { return amps_(static_cast<Eigen::Index>(m)); }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    /// Copy scaled to unit norm; throws trivial_state for the zero vector.
    [[nodiscard]] FockVector normalized() const;

    /// Copy embedded in (or cut down to) new_dim levels. Shrinking throws
    /// truncation if the dropped levels carry more than 1e-14 probability.
    [[nodiscard]] FockVector resized(std::size_t new_dim) const;

    /// Global phase chosen so the largest-magnitude amplitude is real positive.
    [[nodiscard]] FockVector phase_fixed() const;

private:
    AmplitudeVector amps_;
};

struct LadderOperators {
    OperatorMatrix a;
    OperatorMatrix adag;
    OperatorMatrix x;
    OperatorMatrix p;
};

/// a[m-1][m] = sqrt(m), x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)).
[[nodiscard]] LadderOperators build_operators(std::size_t dim);

[[nodiscard]] OperatorMatrix number_operator(std::size_t dim);
[[nodiscard]] OperatorMatrix identity_operator(std::size_t dim);

/// <psi|op|psi>. Throws shape_mismatch on dimension mismatch.
[[nodiscard]] Complex expect(const FockVector& state, const OperatorMatrix& op);

/// Real part of <psi|op|psi> for a Hermitian op; throws numerical if the
/// imaginary part exceeds tol.hermitian_imag.
[[nodiscard]] double expect_real(const FockVector& state, const OperatorMatrix& op,
                                 const Tolerances& tol = {});

struct CutoffReport {
    double tail_mass = 0.0;
    std::size_t dim = 0;
};

/// First index of the "top 10%" band used for tail accounting.
[[nodiscard]] std::size_t tail_start(std::size_t dim) noexcept;

/// Probability weight on levels m >= tail_start(D).
[[nodiscard]] CutoffReport cutoff_report(const FockVector& state);

/// Throws truncation when the tail mass exceeds tol.tail_mass. `what`
/// names the caller for the message.
void require_tail_safe(const FockVector& state, const Tolerances& tol, std::string_view what);

/// Highest level whose probability exceeds eps (0 for the vacuum).
[[nodiscard]] std::size_t occupied_band(const FockVector& state, double eps = 1e-16);

/// Dense matrix exponential (Pade scaling and squaring).
[[nodiscard]] OperatorMatrix expm(const OperatorMatrix& generator);

/// diag(e^{i m phi}) exp(G) diag(e^{-i m phi}) for a real generator G, with the
/// exponential itself evaluated in real arithmetic.
[[nodiscard]] OperatorMatrix expm_phase_conjugated(const Eigen::MatrixXd& generator, double phi);

} // namespace contractive
