#pragma once

// Seed states |phi> with <phi|a|phi> = 0 and <phi|a^2|phi> = 0. Displacing
// such a seed gives a generic coherent state (time-independent width under
// oscillator evolution, variance nbar + 1/2); squeezing it first gives the
// squeezed generic family.

#include "contractive/fock_core.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace contractive {

/// |phi> = sum_{m=n}^{N} c_m |m>, with c_{n+1} .. c_{N-1} given and c_n, c_N solved for.
struct PhiSpec {
    std::size_t n = 0;
    std::size_t N = 3;
    std::vector<Complex> free; // c_{n+1}, ..., c_{N-1}
};

struct PhiState {
    FockVector state;
    double n_bar = 0.0;
};

struct PhiCheck {
    bool ok = false;
    double residual_a = 0.0;  // |<a>|
    double residual_a2 = 0.0; // |<a^2>|
};

/// Minimum dimension that holds levels 0..top with room for second moments
/// and an empty tail band.
[[nodiscard]] std::size_t seed_dim(std::size_t top);

/// Solves the 2x2 linear system for (c_n^*, c_N). Throws invalid_spec for a
/// malformed spec, degenerate_spec when |det| < 1e-12 * max|M|^2 and
/// trivial_state when every coefficient vanishes. dim = 0 picks seed_dim(N).
[[nodiscard]] PhiState solve_phi(const PhiSpec& spec, std::size_t dim = 0);

/// Closed form for N = n + 3. Throws degenerate_spec when |c_{n+1}| = |c_{n+2}|.
[[nodiscard]] PhiState solve_phi_n3(std::size_t n, Complex c_np1, Complex c_np2,
                                    std::size_t dim = 0);

/// sum_r sqrt(w_r / sum w) |3r>. Throws invalid_spec for empty, negative or all-zero weights.
[[nodiscard]] PhiState lattice_phi(std::span<const double> weights, std::size_t dim = 0);

/// Bisection on a one-parameter family until |nbar - target| < tol. The
/// family's nbar must bracket the target on [lo, hi].
[[nodiscard]] PhiState bisect_nbar(const std::function<PhiState(double)>& family, double target,
                                   double lo, double hi, double tol = 1e-9);

/// Lattice seed with weights (1 - t) on |0> and t on |3s>, t found by bisection.
/// s = 0 picks the smallest s with 3s >= target.
[[nodiscard]] PhiState lattice_phi_for_nbar(double target, std::size_t s = 0, std::size_t dim = 0);

/// ok iff |<a>| < tol and |<a^2>| < tol.
[[nodiscard]] PhiCheck check_phi(const FockVector& state, double tol);

} // namespace contractive
