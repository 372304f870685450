#include <catch2/catch_amalgamated.hpp>

#include "matnorm/montecarlo.hpp"
#include "matnorm/sym_trace.hpp"
#include "matnorm/wui_moments.hpp"
#include "support/oracles.hpp"

using namespace matnorm;
using Catch::Matchers::WithinAbs;

TEST_CASE("sphere samples are unit vectors and deterministic per config") {
    const MCConfig cfg{0, 2024, 4096};
    const auto batch = sample_sphere(3, 64, cfg);
    for (const auto& xi : batch) {
        double s = 0;
        for (const auto& z : xi) s += std::norm(z);
        CHECK_THAT(s, WithinAbs(1.0, 1e-14));
    }
    const auto again = sample_sphere(3, 64, cfg);
    for (int j = 0; j < 64; ++j)
        for (int i = 0; i < 3; ++i) CHECK(batch[j][i] == again[j][i]);

    // sample j does not depend on how many samples surround it
    const auto shorter = sample_sphere(3, 8, cfg);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 3; ++i) CHECK(batch[j][i] == shorter[j][i]);
}

TEST_CASE("coordinate mass is 1/n within 4 standard errors at N = 10^6") {
    for (int n : {2, 4}) {
        std::vector<Complex> e1(n, Complex{});
        e1[0] = 1.0;
        const MCEstimate est = mc_kernel(e1, 1, MCConfig{1000000, 31, 4096});
        CHECK(std::abs(est.mean.real() - 1.0 / n) <= 4 * est.stderr_est);
    }
}

TEST_CASE("chunked parallel evaluation reproduces the serial mean exactly") {
    const ComplexMatrix a = random_gaussian_matrix(3, 11);
    const MCConfig cfg{100003, 5, 512};
    auto worker = [&] {
        return [&a, ws = detail::SphereWorkspace(3)](std::int64_t i) mutable {
            sphere_point(3, 5, static_cast<std::uint64_t>(i), ws.xi.data());
            return quadratic_form(a, ws.xi.data(), ws.ax.data());
        };
    };
    const MCEstimate serial = detail::mc_reduce(cfg, 1, worker);
    const MCEstimate par2 = detail::mc_reduce(cfg, 2, worker);
    const MCEstimate par4 = detail::mc_reduce(cfg, 4, worker);
    CHECK(serial.mean == par2.mean);
    CHECK(serial.mean == par4.mean);
    CHECK(serial.stderr_est == par2.stderr_est);
    CHECK(serial.stderr_est == par4.stderr_est);
}

TEST_CASE("numerical-power estimate matches the closed form") {
    const ComplexMatrix a = ComplexMatrix::diagonal_real({1, 2});
    const MCEstimate est = mc_numerical_power(a, 2, MCConfig{1000000, 3, 4096});
    CHECK(std::abs(est.mean.real() - 7.0 / 3.0) <= 4 * est.stderr_est);
    CHECK(std::abs(est.mean.imag()) <= 4 * est.stderr_est);
}

TEST_CASE("kernel estimate matches ||z||^{2k} / c_{n,k}") {
    const std::vector<Complex> z = {1.0, 1.0};
    const MCEstimate est = mc_kernel(z, 2, MCConfig{1000000, 17, 4096});
    CHECK(std::abs(est.mean.real() - 4.0 / 3.0) <= 4 * est.stderr_est);
}

TEST_CASE("constant integrand has zero spread") {
    const MCEstimate est = mc_abs_power(ComplexMatrix::identity(3), 2.5, MCConfig{2000, 9, 256});
    CHECK_THAT(est.mean.real(), WithinAbs(1.0, 1e-13));
    CHECK(est.stderr_est <= 1e-13);
}

TEST_CASE("estimator variance at k = 2 matches the closed second moment") {
    const ComplexMatrix h = random_hermitian_matrix(3, 77);
    const std::int64_t n_samples = 400000;
    const MCConfig cfg{n_samples, 13, 4096};
    const MCEstimate est = mc_numerical_power(h, 2, cfg);

    // closed Var(f^2) = E f^4 - (E f^2)^2 for real-valued f
    const double ef4 = std::pow(phi4(h), 4);
    const double ef2 = normalized_sym_trace(h, 2).value.real();
    const double var_closed = ef4 - ef2 * ef2;
    const double var_emp = est.stderr_est * est.stderr_est * static_cast<double>(n_samples);

    // spread of the sample variance is ~sqrt((mu4 - var^2)/N); estimate mu4 of
    // g = f^2 from an independent probe stream
    std::vector<Complex> xi(3), ax(3);
    double mu4 = 0;
    const std::int64_t probe = 200000;
    for (std::int64_t i = 0; i < probe; ++i) {
        sphere_point(3, 999, static_cast<std::uint64_t>(i), xi.data());
        const double f = quadratic_form(h, xi.data(), ax.data()).real();
        const double dev = f * f - ef2; // g - E g
        mu4 += dev * dev * dev * dev;
    }
    mu4 /= static_cast<double>(probe);
    const double band = 4.0 * std::sqrt(std::max(0.0, mu4 - var_closed * var_closed) /
                                        static_cast<double>(n_samples));
    CHECK(std::abs(var_emp - var_closed) <= band + 1e-12);
}

TEST_CASE("mc_moment dispatch and its guards") {
    const ComplexMatrix a = ComplexMatrix::diagonal_real({1, 2});
    MomentRequest req;
    req.kind = MomentRequest::Kind::numerical_power;
    req.matrices = {a};
    req.k = 2;
    CHECK_THROWS_AS(mc_moment(req, MCConfig{999, 0, 128}), ConfigTooSmall);
    const MCEstimate est = mc_moment(req, MCConfig{5000, 1, 512});
    CHECK(est.samples == 5000);

    MomentRequest bad;
    bad.kind = MomentRequest::Kind::kernel;
    bad.k = 0;
    CHECK_THROWS_AS(mc_moment(bad, MCConfig{5000, 1, 512}), InvalidKind);

    MomentRequest mixed;
    mixed.kind = MomentRequest::Kind::mixed;
    mixed.matrices = {a, ComplexMatrix::identity(3)};
    CHECK_THROWS_AS(mc_moment(mixed, MCConfig{5000, 1, 512}), DimensionMismatch);
}

TEST_CASE("bochner estimate matches tr(A*A)/n at q = 1") {
    const ComplexMatrix a = random_gaussian_matrix(3, 21);
    const MCEstimate est = mc_bochner(a, 1.0, MCConfig{500000, 23, 4096});
    const double want = a.frobenius_norm_sq() / 3.0;
    CHECK(std::abs(est.mean.real() - want) <= 4 * est.stderr_est);
}
