#include "contractive/verify.hpp"

#include "contractive/error.hpp"
#include "contractive/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

namespace contractive {

namespace {

using Index = Eigen::Index;

constexpr std::uint32_t kStrata = 128;
constexpr std::uint64_t kBlockSize = kStrata * kStrata;

// T[k][l] = sqrt((k+l)!/k!) / l!, the normal-ordered displacement weights.
class DisplacementTable {
public:
    DisplacementTable(std::size_t rows, std::size_t span) : span_(span + 1), data_(rows * span_) {
        for (std::size_t k = 0; k < rows; ++k) {
            double v = 1.0;
            data_[k * span_] = v;
            for (std::size_t l = 1; l < span_; ++l) {
                v *= std::sqrt(static_cast<double>(k + l)) / static_cast<double>(l);
                data_[k * span_ + l] = v;
            }
        }
    }

    [[nodiscard]] double operator()(std::size_t k, std::size_t l) const { return data_[k * span_ + l]; }

private:
    std::size_t span_;
    std::vector<double> data_;
};

void displaced_head_into(const AmplitudeVector& chi, std::size_t band, const DisplacementTable& table,
                         Complex alpha, std::size_t count, std::vector<Complex>& powers,
                         std::vector<Complex>& w, Complex* out) {
    const std::size_t top = std::max(band, count);
    powers.resize(top + 1);
    // w = e^{-alpha* a} chi, first `count` entries
    const Complex minus_conj = -std::conj(alpha);
    powers[0] = 1.0;
    for (std::size_t l = 1; l <= top; ++l) {
        powers[l] = powers[l - 1] * minus_conj;
    }
    w.assign(count, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < count; ++k) {
        Complex s{0.0, 0.0};
        for (std::size_t j = k; j <= band; ++j) {
            s += chi(static_cast<Index>(j)) * powers[j - k] * table(k, j - k);
        }
        w[k] = s;
    }
    // out = e^{-|alpha|^2/2} e^{alpha a^dag} w, first `count` entries
    powers[0] = 1.0;
    for (std::size_t l = 1; l < count; ++l) {
        powers[l] = powers[l - 1] * alpha;
    }
    const double damp = std::exp(-0.5 * std::norm(alpha));
    for (std::size_t m = 0; m < count; ++m) {
        Complex s{0.0, 0.0};
        for (std::size_t k = 0; k <= m; ++k) {
            s += w[k] * powers[m - k] * table(k, m - k);
        }
        out[m] = damp * s;
    }
}

OperatorMatrix pairwise_sum(std::vector<OperatorMatrix>& parts, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        return parts[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(parts, lo, mid) + pairwise_sum(parts, mid, hi);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                const auto dj = static_cast<double>(j);
                p0 = ((2.0 * dj + 1.0) * z * p1 - dj * p2) / (dj + 1.0);
            }
            dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
}

FockVector squeezed_seed(SqueezeParams xi, const PhiState& phi, std::size_t probe_dim,
                         const Tolerances& tol) {
    std::size_t dim = std::max<std::size_t>({64, 4 * probe_dim, phi.state.dim()});
    for (;; dim *= 2) {
        try {
            return squeeze(phi.state.resized(dim), xi, tol);
        } catch (const Error& e) {
            if (e.code() != Errc::truncation || dim >= 1024) {
                throw;
            }
        }
    }
}

void finish_report(const OperatorMatrix& integral, OvercompletenessReport& rep) {
    const Index k = integral.rows();
    const OperatorMatrix diff = integral - OperatorMatrix::Identity(k, k);
    rep.max_abs_deviation = diff.cwiseAbs().maxCoeff();
    rep.rms_deviation = diff.norm() / static_cast<double>(k);
}

Index safe_block(const std::vector<const OperatorMatrix*>& unitaries, std::size_t dim) {
    const auto d = static_cast<Index>(dim);
    const auto start = static_cast<Index>(tail_start(dim));
    Index block = d / 2;
    for (const OperatorMatrix* u : unitaries) {
        Index n = 0;
        while (n < block) {
            const double leak = std::max(u->col(n).tail(d - start).norm(),
                                         u->row(n).tail(d - start).norm());
            if (leak > 1e-10) {
                break;
            }
            ++n;
        }
        block = n;
    }
    return block;
}

} // namespace

std::string_view to_string(IntegrationMethod m) noexcept {
    return m == IntegrationMethod::monte_carlo ? "monte_carlo" : "grid";
}

AmplitudeVector displaced_head(const FockVector& chi, Complex alpha, std::size_t count) {
    const std::size_t band = occupied_band(chi, 0.0);
    const DisplacementTable table(count, std::max(band, count));
    std::vector<Complex> powers;
    std::vector<Complex> w;
    AmplitudeVector out(static_cast<Index>(count));
    displaced_head_into(chi.amplitudes(), band, table, alpha, count, powers, w, out.data());
    return out;
}

OvercompletenessReport check_overcompleteness(SqueezeParams xi, const PhiState& phi,
                                              std::size_t probe_dim,
                                              const OvercompletenessOptions& opts,
                                              const Tolerances& tol) {
    OvercompletenessReport rep;
    rep.method = opts.method;
    rep.probe_dim = probe_dim;
    rep.budget = opts.budget;
    rep.seed = opts.seed;
    if (probe_dim == 0) {
        return rep;
    }
    const PhiCheck check = check_phi(phi.state, tol.gcs_check);
    if (!check.ok) {
        throw Error(Errc::precondition, "phi is not a generic-coherent seed");
    }

    const FockVector chi = squeezed_seed(xi, phi, probe_dim, tol);
    rep.state_dim = chi.dim();
    if (probe_dim > chi.dim() / 4) {
        throw Error(Errc::precondition, "probe block exceeds a quarter of the cutoff");
    }
    const MomentSummary ms = summarize(chi, tol);
    const double radius = std::sqrt(2.0 * (static_cast<double>(probe_dim) + ms.n_bar)) +
                          4.0 * std::max(std::exp(xi.r), 1.0);
    rep.radius = radius;

    const std::size_t band = occupied_band(chi, 0.0);
    const DisplacementTable table(probe_dim, std::max(band, probe_dim));
    const auto k = static_cast<Index>(probe_dim);
    const AmplitudeVector& amps = chi.amplitudes();

    if (opts.method == IntegrationMethod::grid) {
        const auto total = std::max<std::uint64_t>(opts.budget, 4);
        const auto n_r = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(total))));
        const auto n_phi = static_cast<std::size_t>(
            std::max<std::uint64_t>(2, (total + n_r - 1) / n_r));
        rep.radial_nodes = n_r;
        rep.angular_nodes = n_phi;
        std::vector<double> gx;
        std::vector<double> gw;
        gauss_legendre(n_r, gx, gw);
        OperatorMatrix acc = OperatorMatrix::Zero(k, k);
        std::vector<Complex> powers;
        std::vector<Complex> w;
        AmplitudeVector head(k);
        for (std::size_t i = 0; i < n_r; ++i) {
            const double rho = 0.5 * radius * (gx[i] + 1.0);
            OperatorMatrix ring = OperatorMatrix::Zero(k, k);
            for (std::size_t j = 0; j < n_phi; ++j) {
                const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(n_phi);
                displaced_head_into(amps, band, table, std::polar(rho, ang), probe_dim, powers, w,
                                    head.data());
                ring.noalias() += head * head.adjoint();
            }
            // (1/pi) * rho drho * dphi, dphi = 2 pi / n_phi, drho = R/2 * weight
            acc += ring * (2.0 / static_cast<double>(n_phi) * rho * 0.5 * radius * gw[i]);
        }
        finish_report(acc, rep);
        return rep;
    }

    const std::uint64_t samples = std::max<std::uint64_t>(opts.budget, 1);
    const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<OperatorMatrix> partial(blocks);

    auto run_block = [&](std::uint64_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 gen(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::uint64_t first = b * kBlockSize;
        const std::uint64_t count = std::min(kBlockSize, samples - first);
        // jittered strata in (rho^2 / R^2, angle), visited in random order so a
        // partial block is still uniform
        std::vector<std::uint32_t> order(kBlockSize);
        std::iota(order.begin(), order.end(), 0u);
        std::shuffle(order.begin(), order.end(), gen);
        OperatorMatrix acc = OperatorMatrix::Zero(k, k);
        std::vector<Complex> powers;
        std::vector<Complex> w;
        AmplitudeVector head(k);
        for (std::uint64_t s = 0; s < count; ++s) {
            const double u1 = (static_cast<double>(order[s] / kStrata) + unit(gen)) / kStrata;
            const double u2 = (static_cast<double>(order[s] % kStrata) + unit(gen)) / kStrata;
            const double rho = radius * std::sqrt(u1);
            const double ang = 2.0 * std::numbers::pi * u2;
            displaced_head_into(amps, band, table, std::polar(rho, ang), probe_dim, powers, w,
                                head.data());
            acc.noalias() += head * head.adjoint();
        }
        partial[b] = std::move(acc);
    };

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) {
            run_block(b);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t b = t; b < blocks; b += workers) {
                    run_block(b);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // uniform density 1/(pi R^2) against the 1/pi measure
    const OperatorMatrix total = pairwise_sum(partial, 0, partial.size());
    finish_report(total * (radius * radius / static_cast<double>(samples)), rep);
    return rep;
}

IdentityResiduals check_conjugation_identities(std::size_t dim, Displacement alpha, SqueezeParams xi,
                                               std::size_t block_override) {
    if (dim < 32) {
        throw Error(Errc::invalid_dimension, "identity check needs dim >= 32");
    }
    const LadderOperators ops = build_operators(dim);
    const double mu = xi.mu();
    const Complex nu = xi.nu();
    const Complex a0 = alpha.alpha;
    const Complex beta = mu * a0 + nu * std::conj(a0);
    const auto d = static_cast<Index>(dim);

    const OperatorMatrix b = mu * ops.a + nu * ops.adag;
    const OperatorMatrix bdag = b.adjoint();
    const OperatorMatrix dop = displacement_operator(alpha, dim);
    const OperatorMatrix sop = squeeze_operator(xi, dim);
    const OperatorMatrix dbeta = expm(beta * bdag - std::conj(beta) * b);

    IdentityResiduals res;
    const Index block = block_override > 0
                            ? static_cast<Index>(std::min(block_override, dim))
                            : safe_block({&dop, &sop, &dbeta}, dim);
    res.safe_block = static_cast<std::size_t>(block);
    if (block == 0) {
        return res;
    }
    const OperatorMatrix id = OperatorMatrix::Identity(d, d);
    auto residual = [block](const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
        return (lhs - rhs).topLeftCorner(block, block).norm();
    };
    res.displacement = residual(dop.adjoint() * ops.a * dop, ops.a + a0 * id);
    res.bogoliubov_displacement = residual(dbeta.adjoint() * b * dbeta, b + beta * id);
    res.squeeze = residual(sop * ops.a * sop.adjoint(), b);
    res.d_beta_vs_d_alpha = residual(dbeta, dop);
    return res;
}

ExtremalAudit audit_extremal(const FockVector& state, const Tolerances& tol) {
    const MomentSummary s = summarize(state, tol);
    if (!(s.var_x > 0.0)) {
        throw Error(Errc::invalid_state, "position variance vanishes");
    }
    const ExtremalLambda lam = ExtremalLambda::from_moments(s.var_x, s.var_p, s.cov);

    const LadderOperators ops = build_operators(state.dim());
    const AmplitudeVector& v = state.amplitudes();
    const AmplitudeVector xv = ops.x * v;
    const AmplitudeVector pv = ops.p * v;
    const double mean_x = v.dot(xv).real();
    const double mean_p = v.dot(pv).real();
    const AmplitudeVector dx = xv - mean_x * v;
    const AmplitudeVector dp = pv - mean_p * v;

    ExtremalAudit out;
    out.lambda_fit = lam.value();
    out.residual = (dp - Complex(0.0, 1.0) * lam.value() * dx).norm();

    const double root = std::sqrt(std::max(0.0, 4.0 * s.var_x * s.var_p - 1.0));
    const double im = lam.value().imag();
    const double slack = 1e-6 * std::max(1.0, root);
    if (im == 0.0) {
        out.cov_sign_consistent = root <= slack && std::abs(s.cov) <= slack;
    } else {
        out.cov_sign_consistent = std::abs(s.cov - (im > 0.0 ? -root : root)) <= slack;
    }
    return out;
}

} // namespace contractive
