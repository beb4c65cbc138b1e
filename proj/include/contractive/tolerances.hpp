#pragma once

namespace contractive {

/// Numerical thresholds shared by the library. Defaults are the module
/// constants; the CLI overrides them from a config file.
struct Tolerances {
    /// Maximum probability weight allowed on the top 10% of the Fock ladder.
    double tail_mass = 1e-8;
    /// Largest imaginary part tolerated in the expectation of a Hermitian operator.
    double hermitian_imag = 1e-10;
    /// Residual bound for the seed conditions <a> = <a^2> = 0.
    double gcs_check = 1e-8;
    /// Relative tolerance used when classifying a moment summary.
    double classify = 1e-7;
};

} // namespace contractive
