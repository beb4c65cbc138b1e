#include "contractive/fock_core.hpp"

#include "contractive/error.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace contractive {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t m) { return static_cast<Index>(m); }

} // namespace

FockVector::FockVector(AmplitudeVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw Error(Errc::invalid_dimension,
                    "Fock vector needs dim >= 2, got " + std::to_string(amps_.size()));
    }
}

FockVector FockVector::normalized() const {
    const double n = amps_.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(Errc::trivial_state, "cannot normalize a zero or non-finite vector");
    }
    return FockVector(amps_ / n);
}

FockVector FockVector::resized(std::size_t new_dim) const {
    if (new_dim < 2) {
        throw Error(Errc::invalid_dimension, "resize target must be >= 2");
    }
    const std::size_t old_dim = dim();
    AmplitudeVector out = AmplitudeVector::Zero(idx(new_dim));
    if (new_dim >= old_dim) {
        out.head(idx(old_dim)) = amps_;
        return FockVector(std::move(out));
    }
    const double dropped = amps_.tail(idx(old_dim - new_dim)).squaredNorm();
    if (dropped > 1e-14) {
        throw Error(Errc::truncation, "shrinking to dim " + std::to_string(new_dim) +
                                          " drops probability " + std::to_string(dropped));
    }
    out = amps_.head(idx(new_dim));
    return FockVector(std::move(out));
}

FockVector FockVector::phase_fixed() const {
    Index best = 0;
    amps_.cwiseAbs().maxCoeff(&best);
    const Complex c = amps_(best);
    if (std::abs(c) == 0.0) {
        return *this;
    }
    return FockVector(amps_ * (std::conj(c) / std::abs(c)));
}

LadderOperators build_operators(std::size_t dim) {
    if (dim < 2) {
        throw Error(Errc::invalid_dimension, "operators need dim >= 2, got " + std::to_string(dim));
    }
    const Index d = idx(dim);
    LadderOperators ops;
    ops.a = OperatorMatrix::Zero(d, d);
    for (Index m = 1; m < d; ++m) {
        ops.a(m - 1, m) = std::sqrt(static_cast<double>(m));
    }
    ops.adag = ops.a.adjoint();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ops.x = (ops.a + ops.adag) * inv_sqrt2;
    // (a - a^dag)/(i sqrt2) = -i (a - a^dag)/sqrt2
    ops.p = (ops.a - ops.adag) * Complex(0.0, -inv_sqrt2);
    return ops;
}

OperatorMatrix number_operator(std::size_t dim) {
    if (dim < 2) {
        throw Error(Errc::invalid_dimension, "operators need dim >= 2");
    }
    OperatorMatrix n = OperatorMatrix::Zero(idx(dim), idx(dim));
    for (std::size_t m = 0; m < dim; ++m) {
        n(idx(m), idx(m)) = static_cast<double>(m);
    }
    return n;
}

OperatorMatrix identity_operator(std::size_t dim) {
    return OperatorMatrix::Identity(idx(dim), idx(dim));
}

Complex expect(const FockVector& state, const OperatorMatrix& op) {
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != state.dim()) {
        throw Error(Errc::shape_mismatch, "operator is " + std::to_string(op.rows()) + "x" +
                                              std::to_string(op.cols()) + ", state dim " +
                                              std::to_string(state.dim()));
    }
    const AmplitudeVector& v = state.amplitudes();
    return v.dot(op * v); // Eigen's dot conjugates the left operand
}

double expect_real(const FockVector& state, const OperatorMatrix& op, const Tolerances& tol) {
    const Complex z = expect(state, op);
    if (std::abs(z.imag()) > tol.hermitian_imag) {
        throw Error(Errc::numerical,
                    "imaginary part " + std::to_string(z.imag()) + " in Hermitian expectation");
    }
    return z.real();
}

std::size_t tail_start(std::size_t dim) noexcept {
    return (9 * dim) / 10;
}

CutoffReport cutoff_report(const FockVector& state) {
    const std::size_t d = state.dim();
    const std::size_t start = tail_start(d);
    const double tail = state.amplitudes().tail(idx(d - start)).squaredNorm();
    const double total = state.amplitudes().squaredNorm();
    CutoffReport report;
    report.dim = d;
    report.tail_mass = total > 0.0 ? std::clamp(tail / total, 0.0, 1.0) : 0.0;
    return report;
}

void require_tail_safe(const FockVector& state, const Tolerances& tol, std::string_view what) {
    const CutoffReport r = cutoff_report(state);
    if (r.tail_mass > tol.tail_mass) {
        std::ostringstream os;
        os << what << ": tail mass " << r.tail_mass << " at dim " << r.dim << " (under-resolved)";
        throw Error(Errc::truncation, os.str());
    }
}

std::size_t occupied_band(const FockVector& state, double eps) {
    const AmplitudeVector& v = state.amplitudes();
    for (Index m = v.size() - 1; m > 0; --m) {
        if (std::norm(v(m)) > eps) {
            return static_cast<std::size_t>(m);
        }
    }
    return 0;
}

OperatorMatrix expm(const OperatorMatrix& generator) {
    if (generator.isZero(0.0)) {
        return OperatorMatrix::Identity(generator.rows(), generator.cols());
    }
    return generator.exp();
}

OperatorMatrix expm_phase_conjugated(const Eigen::MatrixXd& generator, double phi) {
    const Eigen::Index d = generator.rows();
    const Eigen::MatrixXd e =
        generator.isZero(0.0) ? Eigen::MatrixXd::Identity(d, d) : Eigen::MatrixXd(generator.exp());
    AmplitudeVector phase(d);
    for (Eigen::Index m = 0; m < d; ++m) {
        phase(m) = std::polar(1.0, static_cast<double>(m) * phi);
    }
    return phase.asDiagonal() * e.cast<Complex>() * phase.conjugate().asDiagonal();
}

} // namespace contractive
