#include "contractive/gcs_solver.hpp"

#include "contractive/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace contractive {

namespace {

using Index = Eigen::Index;

double mean_number(const AmplitudeVector& c) {
    double s = 0.0;
    for (Index m = 0; m < c.size(); ++m) {
        s += static_cast<double>(m) * std::norm(c(m));
    }
    return s;
}

PhiState finish(AmplitudeVector coeffs, std::size_t top, std::size_t dim) {
    if (dim == 0) {
        dim = seed_dim(top);
    }
    if (dim <= top) {
        throw Error(Errc::invalid_dimension, "dim " + std::to_string(dim) +
                                                 " cannot hold level " + std::to_string(top));
    }
    if (coeffs.squaredNorm() == 0.0) {
        throw Error(Errc::trivial_state, "all coefficients vanish");
    }
    AmplitudeVector padded = AmplitudeVector::Zero(static_cast<Index>(dim));
    padded.head(coeffs.size()) = coeffs;
    FockVector state = FockVector(std::move(padded)).normalized().phase_fixed();
    const double nbar = mean_number(state.amplitudes());
    return PhiState{std::move(state), nbar};
}

} // namespace

std::size_t seed_dim(std::size_t top) {
    // smallest d with tail_start(d) > top, and at least two spare levels
    std::size_t d = top + 3;
    while (tail_start(d) <= top) {
        ++d;
    }
    return d;
}

PhiState solve_phi(const PhiSpec& spec, std::size_t dim) {
    const std::size_t n = spec.n;
    const std::size_t N = spec.N;
    if (N < n + 3) {
        throw Error(Errc::invalid_spec, "need N >= n + 3");
    }
    if (spec.free.size() != N - n - 1) {
        throw Error(Errc::invalid_spec, "expected " + std::to_string(N - n - 1) +
                                            " free coefficients, got " +
                                            std::to_string(spec.free.size()));
    }

    AmplitudeVector c = AmplitudeVector::Zero(static_cast<Index>(N + 1));
    for (std::size_t k = 0; k < spec.free.size(); ++k) {
        c(static_cast<Index>(n + 1 + k)) = spec.free[k];
    }
    auto at = [&](std::size_t m) { return c(static_cast<Index>(m)); };
    const auto dn = static_cast<double>(n);
    const auto dN = static_cast<double>(N);

    // M (c_n^*, c_N)^T = rhs
    const Complex m00 = at(n + 1) * std::sqrt(dn + 1.0);
    const Complex m01 = std::conj(at(N - 1)) * std::sqrt(dN);
    const Complex m10 = at(n + 2) * std::sqrt((dn + 1.0) * (dn + 2.0));
    const Complex m11 = std::conj(at(N - 2)) * std::sqrt((dN - 1.0) * dN);

    // Empty sums (upper limit below the lower one) stay zero.
    Complex rhs0{0.0, 0.0};
    for (std::size_t m = n + 1; m + 2 <= N; ++m) {
        rhs0 -= std::conj(at(m)) * at(m + 1) * std::sqrt(static_cast<double>(m) + 1.0);
    }
    Complex rhs1{0.0, 0.0};
    for (std::size_t m = n + 1; m + 3 <= N; ++m) {
        const auto dm = static_cast<double>(m);
        rhs1 -= std::conj(at(m)) * at(m + 2) * std::sqrt((dm + 1.0) * (dm + 2.0));
    }

    const Complex det = m00 * m11 - m01 * m10;
    const double scale = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
    if (!(std::abs(det) >= 1e-12 * scale * scale) || scale == 0.0) {
        std::ostringstream os;
        os << "singular 2x2 system, |det| = " << std::abs(det) << " (max entry " << scale << ")";
        throw Error(Errc::degenerate_spec, os.str());
    }
    const Complex cn_conj = (rhs0 * m11 - m01 * rhs1) / det;
    const Complex cN = (m00 * rhs1 - m10 * rhs0) / det;
    c(static_cast<Index>(n)) = std::conj(cn_conj);
    c(static_cast<Index>(N)) = cN;
    if (c.squaredNorm() == 0.0) {
        throw Error(Errc::trivial_state, "every coefficient vanishes");
    }
    return finish(std::move(c), N, dim);
}

PhiState solve_phi_n3(std::size_t n, Complex c_np1, Complex c_np2, std::size_t dim) {
    const double w1 = std::norm(c_np1);
    const double w2 = std::norm(c_np2);
    if (w1 == 0.0 && w2 == 0.0) {
        throw Error(Errc::trivial_state, "c_{n+1} and c_{n+2} both vanish");
    }
    const double den = w1 - w2;
    if (!(std::abs(den) >= 1e-12 * std::max(w1, w2))) {
        std::ostringstream os;
        os << "|c_{n+1}|^2 - |c_{n+2}|^2 = " << den;
        throw Error(Errc::degenerate_spec, os.str());
    }
    const auto dn = static_cast<double>(n);
    const Complex common = -std::sqrt(dn + 2.0) * std::conj(c_np1) * c_np2 / den;
    const Complex cn_conj_scaled = common * std::conj(c_np1); // c_n^* sqrt(n+1)
    const Complex cn3_scaled = -common * c_np2;               // c_{n+3} sqrt(n+3)

    AmplitudeVector c = AmplitudeVector::Zero(static_cast<Index>(n + 4));
    c(static_cast<Index>(n)) = std::conj(cn_conj_scaled) / std::sqrt(dn + 1.0);
    c(static_cast<Index>(n + 1)) = c_np1;
    c(static_cast<Index>(n + 2)) = c_np2;
    c(static_cast<Index>(n + 3)) = cn3_scaled / std::sqrt(dn + 3.0);
    return finish(std::move(c), n + 3, dim);
}

PhiState lattice_phi(std::span<const double> weights, std::size_t dim) {
    if (weights.empty()) {
        throw Error(Errc::invalid_spec, "lattice weights are empty");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(Errc::invalid_spec, "lattice weights must be finite and nonnegative");
        }
        total += w;
    }
    if (total == 0.0) {
        throw Error(Errc::invalid_spec, "lattice weights are all zero");
    }
    const std::size_t s = weights.size() - 1;
    AmplitudeVector c = AmplitudeVector::Zero(static_cast<Index>(3 * s + 1));
    double nbar = 0.0;
    for (std::size_t r = 0; r <= s; ++r) {
        c(static_cast<Index>(3 * r)) = std::sqrt(weights[r] / total);
        nbar += 3.0 * static_cast<double>(r) * weights[r] / total;
    }
    // amplitudes are already normalized and real, keep them untouched
    if (dim == 0) {
        dim = seed_dim(3 * s);
    }
    if (dim <= 3 * s) {
        throw Error(Errc::invalid_dimension, "dim too small for the lattice seed");
    }
    AmplitudeVector padded = AmplitudeVector::Zero(static_cast<Index>(dim));
    padded.head(c.size()) = c;
    return PhiState{FockVector(std::move(padded)), nbar};
}

PhiState bisect_nbar(const std::function<PhiState(double)>& family, double target, double lo,
                     double hi, double tol) {
    PhiState at_lo = family(lo);
    PhiState at_hi = family(hi);
    const double f_lo = at_lo.n_bar - target;
    const double f_hi = at_hi.n_bar - target;
    if (std::abs(f_lo) < tol) {
        return at_lo;
    }
    if (std::abs(f_hi) < tol) {
        return at_hi;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw Error(Errc::invalid_parameter, "target nbar is not bracketed by the family");
    }
    const bool increasing = f_hi > 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        PhiState at_mid = family(mid);
        const double f = at_mid.n_bar - target;
        if (std::abs(f) < tol) {
            return at_mid;
        }
        if ((f > 0.0) == increasing) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    throw Error(Errc::numerical, "nbar bisection did not converge");
}

PhiState lattice_phi_for_nbar(double target, std::size_t s, std::size_t dim) {
    if (!(target >= 0.0) || !std::isfinite(target)) {
        throw Error(Errc::invalid_parameter, "target nbar must be finite and >= 0");
    }
    if (s == 0) {
        s = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(target / 3.0)));
    }
    if (target > 3.0 * static_cast<double>(s)) {
        throw Error(Errc::invalid_parameter, "target nbar exceeds 3s");
    }
    auto family = [s, dim](double t) {
        std::vector<double> w(s + 1, 0.0);
        w.front() = 1.0 - t;
        w.back() = t;
        return lattice_phi(w, dim);
    };
    return bisect_nbar(family, target, 0.0, 1.0);
}

PhiCheck check_phi(const FockVector& state, double tol) {
    const AmplitudeVector& c = state.amplitudes();
    Complex first{0.0, 0.0};
    Complex second{0.0, 0.0};
    for (Index m = 0; m + 1 < c.size(); ++m) {
        const auto dm = static_cast<double>(m);
        first += std::conj(c(m)) * c(m + 1) * std::sqrt(dm + 1.0);
        if (m + 2 < c.size()) {
            second += std::conj(c(m)) * c(m + 2) * std::sqrt((dm + 1.0) * (dm + 2.0));
        }
    }
    PhiCheck out;
    out.residual_a = std::abs(first);
    out.residual_a2 = std::abs(second);
    out.ok = out.residual_a < tol && out.residual_a2 < tol;
    return out;
}

} // namespace contractive
