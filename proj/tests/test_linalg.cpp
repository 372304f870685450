#include <catch2/catch_amalgamated.hpp>

#include "matnorm/linalg.hpp"

using namespace matnorm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("power_traces on the worked examples") {
    const auto t_id = power_traces(ComplexMatrix::identity(3), 4);
    for (const auto& v : t_id) CHECK_THAT(v.real(), WithinAbs(3.0, 1e-14));

    const auto t12 = power_traces(ComplexMatrix::diagonal_real({1, 2}), 4);
    const double want12[] = {3, 5, 9, 17}; // 1^m + 2^m
    for (int m = 0; m < 4; ++m) CHECK_THAT(t12[m].real(), WithinAbs(want12[m], 1e-12));

    const auto talt = power_traces(ComplexMatrix::diagonal_real({1, -1}), 3);
    CHECK_THAT(talt[0].real(), WithinAbs(0.0, 1e-14));
    CHECK_THAT(talt[1].real(), WithinAbs(2.0, 1e-14));
    CHECK_THAT(talt[2].real(), WithinAbs(0.0, 1e-14));
}

TEST_CASE("power_traces equals sum of eigenvalue powers on unitary conjugates of diagonals") {
    const std::vector<double> lam = {2.5, -1.0, 0.25, 3.0};
    const ComplexMatrix u = random_unitary(4, 99);
    const ComplexMatrix a = u * ComplexMatrix::diagonal_real(lam) * u.adjoint();
    const auto tr = power_traces(a, 5);
    for (int m = 1; m <= 5; ++m) {
        double want = 0;
        for (double l : lam) want += std::pow(l, m);
        CHECK_THAT(tr[m - 1].real(), WithinAbs(want, 1e-9 * (1 + std::abs(want))));
        CHECK_THAT(tr[m - 1].imag(), WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("hermitian_eigenvalues on closed-form cases") {
    const Spectrum id = hermitian_eigenvalues(ComplexMatrix::identity(2));
    CHECK(id.values == std::vector<double>{1, 1});

    ComplexMatrix h(2);
    h(0, 0) = 2;
    h(0, 1) = 1;
    h(1, 0) = 1;
    h(1, 1) = 2;
    const Spectrum s = hermitian_eigenvalues(h); // char poly (2-x)^2 - 1
    CHECK_THAT(s.values[0], WithinAbs(3.0, 1e-12));
    CHECK_THAT(s.values[1], WithinAbs(1.0, 1e-12));

    const Spectrum d = hermitian_eigenvalues(ComplexMatrix::diagonal_real({1, -1}));
    CHECK(d.values == std::vector<double>{1, -1});
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    ComplexMatrix a(2);
    a(0, 1) = Complex(0, 1);
    a(1, 0) = Complex(0, 1); // conj mismatch
    CHECK_THROWS_AS(hermitian_eigenvalues(a), NotHermitian);
}

TEST_CASE("eigenvalue sums match traces on random Hermitian matrices up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const ComplexMatrix h = random_hermitian_matrix(n, 1000 * n + seed);
            const Spectrum s = hermitian_eigenvalues(h);
            double sum = 0;
            for (double v : s.values) sum += v;
            const double tr = h.trace().real();
            CHECK_THAT(sum, WithinAbs(tr, 1e-10 * (1 + std::abs(tr))));
        }
    }
}

TEST_CASE("singular_values on closed-form cases") {
    const Spectrum d = singular_values(ComplexMatrix::diagonal_real({1, -2}));
    CHECK_THAT(d.values[0], WithinAbs(2.0, 1e-12));
    CHECK_THAT(d.values[1], WithinAbs(1.0, 1e-12));

    for (int n : {1, 3, 5}) {
        const Spectrum u = singular_values(random_unitary(n, 7));
        for (double v : u.values) CHECK_THAT(v, WithinAbs(1.0, 1e-12));
    }

    ComplexMatrix nil(2);
    nil(0, 1) = 1; // A*A = diag(0,1)
    const Spectrum s = singular_values(nil);
    CHECK_THAT(s.values[0], WithinAbs(1.0, 1e-12));
    CHECK_THAT(s.values[1], WithinAbs(0.0, 1e-12));
}

TEST_CASE("singular values are invariant under A -> UAV") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const int n = 3 + static_cast<int>(seed % 2);
        const ComplexMatrix a = random_gaussian_matrix(n, 50 + seed);
        const ComplexMatrix u = random_unitary(n, 60 + seed);
        const ComplexMatrix v = random_unitary(n, 70 + seed);
        const Spectrum s1 = singular_values(a);
        const Spectrum s2 = singular_values(u * a * v);
        for (int i = 0; i < n; ++i)
            CHECK_THAT(s2.values[i], WithinRel(s1.values[i], 1e-9));
    }
}

TEST_CASE("schatten_norm examples and monotonicity in p") {
    const ComplexMatrix d12 = ComplexMatrix::diagonal_real({1, 2});
    CHECK_THAT(schatten_norm(d12, 1), WithinRel(3.0, 1e-12));
    CHECK_THAT(schatten_norm(d12, 2), WithinRel(std::sqrt(5.0), 1e-12));
    for (int n : {2, 4})
        for (double p : {1.0, 1.5, 3.0})
            CHECK_THAT(schatten_norm(ComplexMatrix::identity(n), p), WithinRel(std::pow(n, 1.0 / p), 1e-12));

    CHECK_THROWS_AS(schatten_norm(d12, 0.5), InvalidOrder);

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const ComplexMatrix a = random_gaussian_matrix(4, 80 + seed);
        double prev = schatten_norm(a, 1);
        for (double p : {1.5, 2.0, 3.0, 6.0}) {
            const double cur = schatten_norm(a, p);
            CHECK(cur <= prev * (1 + 1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("random_unitary contract") {
    const ComplexMatrix u1 = random_unitary(1, 123);
    CHECK_THAT(std::abs(u1(0, 0)), WithinAbs(1.0, 1e-13));

    const ComplexMatrix u = random_unitary(4, 7);
    const ComplexMatrix g = u.adjoint() * u;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK_THAT(std::abs(g(i, j) - (i == j ? 1.0 : 0.0)), WithinAbs(0.0, 1e-12));

    // determinism: bit-identical repeat
    const ComplexMatrix v = random_unitary(4, 7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(u(i, j) == v(i, j));
}

TEST_CASE("matrix arithmetic basics") {
    ComplexMatrix a(2), b(2);
    a(0, 0) = Complex(1, 2);
    a(0, 1) = Complex(0, -1);
    a(1, 0) = 3;
    a(1, 1) = Complex(-2, 0.5);
    b(0, 0) = 2;
    b(1, 1) = Complex(0, 1);

    const ComplexMatrix c = a * b;
    CHECK(c(0, 0) == Complex(2, 4));
    CHECK(c(0, 1) == Complex(1, 0)); // (0,-1)*(0,1) = 1
    const ComplexMatrix adj = a.adjoint();
    CHECK(adj(1, 0) == Complex(0, 1));
    CHECK(adj(0, 1) == Complex(3, 0));
    CHECK_THAT(a.frobenius_norm_sq(), WithinRel(1 + 4 + 1 + 9 + 4 + 0.25, 1e-14));

    ComplexMatrix m3(3);
    CHECK_THROWS_AS(a + m3, DimensionMismatch);
    CHECK_THROWS_AS(ComplexMatrix(0), DimensionMismatch);
}
