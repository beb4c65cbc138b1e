#include "contractive/error.hpp"
#include "contractive/fock_core.hpp"
#include "contractive/json_io.hpp"
#include "contractive/state_factory.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace contractive;

TEST_CASE("ladder matrices have the exact sparse structure") {
    const LadderOperators two = build_operators(2);
    CHECK(two.a(0, 0) == Complex(0.0));
    CHECK(two.a(0, 1) == Complex(1.0));
    CHECK(two.a(1, 0) == Complex(0.0));
    CHECK(two.a(1, 1) == Complex(0.0));

    const LadderOperators ops = build_operators(10);
    for (Eigen::Index i = 0; i < 10; ++i) {
        for (Eigen::Index j = 0; j < 10; ++j) {
            const Complex expected = (j == i + 1) ? Complex(std::sqrt(static_cast<double>(j))) : Complex(0.0);
            CHECK(ops.a(i, j) == expected);
        }
    }
    CHECK((ops.x - ops.x.adjoint()).norm() == 0.0);
    CHECK((ops.p - ops.p.adjoint()).norm() == 0.0);
}

TEST_CASE("canonical commutator holds except at the truncation corner") {
    const LadderOperators ops = build_operators(8);
    const OperatorMatrix comm = ops.x * ops.p - ops.p * ops.x;
    const OperatorMatrix expected = Complex(0.0, 1.0) * OperatorMatrix::Identity(7, 7);
    CHECK((comm.topLeftCorner(7, 7) - expected).norm() < 1e-14);
    CHECK(std::abs(comm(7, 7) - Complex(0.0, 1.0)) > 1.0);
}

TEST_CASE("build_operators rejects dim < 2") {
    CHECK_THROWS_AS((void)build_operators(1), Error);
    try {
        (void)build_operators(0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_dimension);
    }
}

TEST_CASE("vacuum quadrature second moments are 1/2") {
    const LadderOperators ops = build_operators(64);
    const FockVector vac = number_state(0, 64);
    CHECK(expect_real(vac, ops.x * ops.x) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(expect_real(vac, ops.p * ops.p) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("expect on number and coherent states") {
    const FockVector three = number_state(3, 8);
    CHECK(expect(three, number_operator(8)) == Complex(3.0));
    const FockVector two = number_state(2, 8);
    CHECK(std::abs(expect(two, build_operators(8).x)) == 0.0);

    const FockVector coh = FockVector(oracle::coherent_amplitudes({1.0, 0.0}, 64)).normalized();
    const Complex a = expect(coh, build_operators(64).a);
    CHECK(std::abs(a - Complex(1.0)) < 1e-8);
}

TEST_CASE("expect reports shape mismatches") {
    const FockVector v = number_state(0, 4);
    try {
        (void)expect(v, build_operators(5).a);
        FAIL("expected a shape error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::shape_mismatch);
    }
}

TEST_CASE("number operator eigenvalues are exact") {
    const std::size_t d = 40;
    const OperatorMatrix n = number_operator(d);
    const LadderOperators ops = build_operators(d);
    CHECK((ops.adag * ops.a - n).cwiseAbs().maxCoeff() < 1e-13);
    for (std::size_t k = 0; k < d; ++k) {
        const AmplitudeVector out = n * number_state(k, d).amplitudes();
        CHECK((out - static_cast<double>(k) * number_state(k, d).amplitudes()).norm() == 0.0);
    }
}

TEST_CASE("property: Hermitian expectations are real, expect is linear and conjugate-symmetric") {
    std::mt19937_64 rng(7);
    const std::size_t d = 48;
    const LadderOperators ops = build_operators(d);
    const OperatorMatrix herm[] = {ops.x, ops.p, ops.x * ops.x, ops.p * ops.p, number_operator(d),
                                   ops.x * ops.p + ops.p * ops.x};
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        const FockVector psi = oracle::random_state(rng, d, 1 + trial % (d - 1));
        for (const auto& h : herm) {
            CHECK(std::abs(expect(psi, h).imag()) < 1e-10);
        }
        const OperatorMatrix A = OperatorMatrix::Random(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        const OperatorMatrix B = OperatorMatrix::Random(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        const Complex c(g(rng), g(rng));
        CHECK(std::abs(std::conj(expect(psi, A)) - expect(psi, A.adjoint())) < 1e-12);
        CHECK(std::abs(expect(psi, A + c * B) - (expect(psi, A) + c * expect(psi, B))) < 1e-11);
    }
}

TEST_CASE("expect_real refuses a non-Hermitian operator") {
    const FockVector v = FockVector(oracle::coherent_amplitudes({0.0, 1.0}, 32)).normalized();
    CHECK_THROWS_AS((void)expect_real(v, build_operators(32).a), Error);
}

TEST_CASE("cutoff report") {
    CHECK(cutoff_report(number_state(0, 16)).tail_mass == 0.0);

    // analytic Poisson weights of |alpha = 2>, truncated to 8 levels
    const FockVector small = FockVector(oracle::coherent_amplitudes({2.0, 0.0}, 8)).normalized();
    CHECK(cutoff_report(small).tail_mass > 0.01);
    CHECK_THROWS_AS(require_tail_safe(small, Tolerances{}, "test"), Error);

    const FockVector big = FockVector(oracle::coherent_amplitudes({2.0, 0.0}, 64)).normalized();
    const CutoffReport r = cutoff_report(big);
    CHECK(r.tail_mass < 1e-12);
    CHECK(r.tail_mass >= 0.0);
    CHECK(r.dim == 64);
}

TEST_CASE("FockVector invariants") {
    CHECK_THROWS_AS(FockVector(AmplitudeVector::Ones(1)), Error);
    const FockVector v = FockVector(AmplitudeVector::Constant(5, Complex(1.0, 2.0))).normalized();
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS((void)FockVector(AmplitudeVector::Zero(3)).normalized(), Error);

    const FockVector grown = number_state(1, 3).resized(10);
    CHECK(grown.dim() == 10);
    CHECK(grown[1] == Complex(1.0));
    CHECK(grown.resized(4).dim() == 4);
    CHECK_THROWS_AS((void)number_state(5, 8).resized(4), Error);

    const FockVector phased = FockVector(AmplitudeVector::Constant(3, Complex(0.0, -2.0))).phase_fixed();
    CHECK(phased[0].real() > 0.0);
    CHECK(phased[0].imag() == 0.0);
}

TEST_CASE("property: FockVector JSON round trip is exact") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const FockVector v = oracle::random_state(rng, 2 + trial, 2 + trial);
        const std::string text = to_json(v).dump();
        const FockVector back = fock_vector_from_json(Json::parse(text));
        CHECK(back.dim() == v.dim());
        CHECK((back.amplitudes() - v.amplitudes()).norm() == 0.0);
    }
    CHECK(to_json(number_state(1, 2)).dump() == R"({"dim":2,"im":[0.0,0.0],"re":[0.0,1.0]})");
    CHECK_THROWS_AS((void)fock_vector_from_json(Json::parse(R"({"dim":3,"re":[1,0],"im":[0,0]})")), Error);
}

TEST_CASE("expm of the zero generator is exactly the identity") {
    const OperatorMatrix z = OperatorMatrix::Zero(6, 6);
    CHECK((expm(z) - OperatorMatrix::Identity(6, 6)).norm() == 0.0);
}
