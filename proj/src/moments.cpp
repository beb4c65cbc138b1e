#include "contractive/moments.hpp"

#include "contractive/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace contractive {

namespace {

double check_real(Complex z, double tol, const char* what) {
    if (std::abs(z.imag()) > tol) {
        std::ostringstream os;
        os << what << " has imaginary residue " << z.imag();
        throw Error(Errc::numerical, os.str());
    }
    return z.real();
}

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

} // namespace

MomentSummary summarize(const FockVector& state, const Tolerances& tol) {
    require_tail_safe(state, tol, "summarize");
    const LadderOperators ops = build_operators(state.dim());
    const AmplitudeVector& v = state.amplitudes();
    const AmplitudeVector xv = ops.x * v;
    const AmplitudeVector pv = ops.p * v;
    const AmplitudeVector av = ops.a * v;

    const double norm2 = v.squaredNorm();
    const double mean_x = check_real(v.dot(xv), tol.hermitian_imag, "<x>") / norm2;
    const double mean_p = check_real(v.dot(pv), tol.hermitian_imag, "<p>") / norm2;
    const double x2 = xv.squaredNorm() / norm2;
    const double p2 = pv.squaredNorm() / norm2;
    // <xp + px> with x, p Hermitian: <x psi|p psi> + <p psi|x psi>
    const double sym = check_real(xv.dot(pv) + pv.dot(xv), tol.hermitian_imag, "<xp + px>") / norm2;

    MomentSummary s;
    s.var_x = x2 - mean_x * mean_x;
    s.var_p = p2 - mean_p * mean_p;
    s.cov = sym - 2.0 * mean_x * mean_p;
    s.n_bar = av.squaredNorm() / norm2;
    s.uncertainty_product = s.var_x * s.var_p;
    return s;
}

MomentSummary make_summary(double var_x, double var_p, double cov, double n_bar) {
    if (!(var_x > 0.0) || !(var_p > 0.0)) {
        throw Error(Errc::invalid_state, "variances must be positive");
    }
    return MomentSummary{var_x, var_p, cov, n_bar, var_x * var_p};
}

double robertson_margin(const MomentSummary& s) {
    return 4.0 * s.var_x * s.var_p - s.cov * s.cov - 1.0;
}

StateClass classify(const MomentSummary& s, double tol) {
    StateClass c;
    const double var_scale = std::max(1.0, std::max(s.var_x, s.var_p));
    c.is_squeezed = s.var_x < s.var_p - tol * var_scale;
    c.is_contractive = s.cov < -tol * var_scale;
    c.is_gcs = close(s.var_x, s.var_p, tol) && std::abs(s.cov) <= tol * var_scale;
    c.is_extremal = close(s.cov * s.cov, 4.0 * s.var_x * s.var_p - 1.0, tol);
    return c;
}

double sgcs_covariance_from_variances(double var_x, double var_p, double n_bar, double theta) {
    const double k = 2.0 * n_bar + 1.0;
    const double root = std::sqrt(std::max(0.0, 4.0 * var_x * var_p - k * k));
    const double sn = std::sin(theta);
    const double sgn = sn > 0.0 ? 1.0 : (sn < 0.0 ? -1.0 : 0.0);
    return -sgn * root;
}

MomentSummary sgcs_predicted_moments(double n_bar, SqueezeParams xi) {
    if (!(n_bar >= 0.0)) {
        throw Error(Errc::invalid_parameter, "nbar must be >= 0");
    }
    const double c2 = std::cosh(2.0 * xi.r);
    const double s2 = std::sinh(2.0 * xi.r);
    const double h = n_bar + 0.5;
    MomentSummary m;
    m.var_x = h * (c2 - std::cos(xi.theta) * s2);
    m.var_p = h * (c2 + std::cos(xi.theta) * s2);
    m.cov = -(2.0 * n_bar + 1.0) * std::sin(xi.theta) * s2;
    m.n_bar = h * c2 - 0.5;
    m.uncertainty_product = m.var_x * m.var_p;

    const double via_variances = sgcs_covariance_from_variances(m.var_x, m.var_p, n_bar, xi.theta);
    // the sqrt form loses digits when cov is small; compare in squared units
    if (std::abs(via_variances * via_variances - m.cov * m.cov) >
            1e-9 * std::max(1.0, 4.0 * m.var_x * m.var_p) ||
        (via_variances != 0.0 && m.cov != 0.0 && (via_variances > 0.0) != (m.cov > 0.0))) {
        throw Error(Errc::numerical, "covariance identity failed for the predicted moments");
    }
    return m;
}

} // namespace contractive
