#include <catch2/catch_amalgamated.hpp>

#include "matnorm/gauge.hpp"
#include "support/oracles.hpp"

using namespace matnorm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("h_q closed form at integer q") {
    // constant tuple: <X xi, xi> is identically c
    for (double c : {0.5, 2.0})
        for (double q : {1.0, 3.0})
            CHECK_THAT(h_q(RealTuple(4, c), q).value, WithinRel(std::pow(c, q), 1e-12));

    CHECK_THAT(h_q({1, 2}, 2).value, WithinRel(7.0 / 3.0, 1e-12));
    CHECK(h_q({1, 2}, 2).method == GaugeMethod::closed_form);

    CHECK_THROWS_AS(h_q({1, -2}, 2), NegativeEntry);
    CHECK_THROWS_AS(h_q({1, 2}, 0.5), InvalidOrder);
    CHECK_THROWS_AS(h_q({1, 2}, 1.5), MCConfigRequired);
}

TEST_CASE("n = 2 closed-form oracle and the simplex sampler") {
    CHECK_THAT(h_q_closed_n2(1, 2, 1.5), WithinRel((std::pow(2.0, 2.5) - 1.0) / 2.5, 1e-14));
    CHECK_THAT(h_q_closed_n2(1, 2, 1.5), WithinAbs(1.862742, 1e-6));
    CHECK_THAT(h_q_closed_n2(2, 2, 1.7), WithinRel(std::pow(2.0, 1.7), 1e-14));
    // at integer q the oracle matches the partition closed form
    CHECK_THAT(h_q_closed_n2(1, 2, 2), WithinRel(7.0 / 3.0, 1e-12));

    const GaugeValue mc = h_q({1, 2}, 1.5, MCConfig{1000000, 3, 4096});
    CHECK(mc.method == GaugeMethod::simplex_mc);
    CHECK(std::abs(mc.value - 1.8627416997969521) <= 4 * mc.stderr_est);
}

TEST_CASE("integer-q closed form sits within 4 stderr of the simplex sampler") {
    RngStream g(stream_key(60, 0));
    for (int n : {2, 3, 5})
        for (int q : {2, 3}) {
            RealTuple x(static_cast<std::size_t>(n));
            for (auto& v : x) v = std::abs(g.next_gaussian_pair().first);
            const double closed = h_q(x, q).value;
            // force the MC path by perturbing q infinitesimally off the integer
            const GaugeValue mc = h_q(x, q + 1e-7, MCConfig{1000000, 71, 4096});
            CHECK(std::abs(mc.value - closed) <= 4 * mc.stderr_est + 1e-5 * closed);
        }
}

TEST_CASE("phi_gauge symmetry and scaling") {
    CHECK_THAT(phi_gauge({-1, 2}, 2).value, WithinRel(std::sqrt(7.0 / 3.0), 1e-12));
    CHECK_THAT(phi_gauge({2, -1}, 2).value, WithinRel(phi_gauge({-1, 2}, 2).value, 1e-14));
    CHECK_THAT(phi_gauge({2, 1}, 2).value, WithinRel(phi_gauge({-1, 2}, 2).value, 1e-14));
    CHECK_THAT(phi_gauge({0, 0, 0}, 3).value, WithinAbs(0.0, 1e-14));
}

TEST_CASE("Phi_q is a norm: homogeneity exact, triangle within 1e-9") {
    RngStream g(stream_key(61, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        RealTuple x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (auto& v : x) v = g.next_gaussian_pair().first;
        for (auto& v : y) v = g.next_gaussian_pair().first;
        const double t = g.next_gaussian_pair().first;
        for (int q : {1, 2, 3}) {
            RealTuple tx = x;
            for (auto& v : tx) v *= t;
            CHECK_THAT(phi_gauge(tx, q).value, WithinRel(std::abs(t) * phi_gauge(x, q).value, 1e-10));
            RealTuple sum = x;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
            CHECK(phi_gauge(sum, q).value <= phi_gauge(x, q).value + phi_gauge(y, q).value + 1e-9);
        }
    }
}

TEST_CASE("majorization on the classic pairs") {
    CHECK(weak_majorizes({1, 1}, {2, 0}));
    CHECK(majorizes({1, 1}, {2, 0}));
    CHECK_FALSE(weak_majorizes({2, 0}, {1, 1}));
    CHECK(weak_majorizes({1, 1}, {1, 1}));
    CHECK(majorizes({1, 1}, {1, 1}));
    CHECK(weak_majorizes({0.5, 0.5}, {2, 0}));
    CHECK_FALSE(majorizes({0.5, 0.5}, {2, 0})); // totals differ
    CHECK_THROWS_AS(weak_majorizes({1, 2}, {1, 2, 3}), LengthMismatch);
}

TEST_CASE("inequality_suite worked examples") {
    { // interpolation: x = (1,2), q = 2, p = 1 gives slack 5/2 - 7/3 = 1/6
        const auto slacks = inequality_suite({1, 2}, {1, 1}, 2, 1);
        for (const auto& s : slacks)
            if (s.name == "mccarthy") {
                REQUIRE(s.applicable);
                CHECK_THAT(s.slack, WithinRel(1.0 / 6.0, 1e-10));
            }
    }
    { // Hoelder with y = all ones reduces to H_q(|x|) <= sqrt(H_q(x^2))
        const auto slacks = inequality_suite({0.3, -1.7, 2.2}, {1, 1, 1}, 3, 1);
        for (const auto& s : slacks)
            if (s.name == "n1") {
                REQUIRE(s.applicable);
                CHECK(s.slack >= -1e-12);
            }
    }
    { // isotonicity at the classic pair, q = 3: H_3(1,1) = 1 <= H_3(2,0) = 2
        const auto slacks = inequality_suite({1, 1}, {2, 0}, 3, 1);
        for (const auto& s : slacks)
            if (s.name == "n5") {
                REQUIRE(s.applicable);
                CHECK_THAT(s.slack, WithinRel(1.0, 1e-10));
            }
    }
    CHECK_THROWS_AS(inequality_suite({1, 2}, {1}, 2, 1), LengthMismatch);
    CHECK_THROWS_AS(inequality_suite({1, 2}, {1, 1}, 1.5, 1), DomainError);
    CHECK_THROWS_AS(inequality_suite({1, 2}, {1, 1}, 2, 0), DomainError);
}

TEST_CASE("all closed-form inequalities hold on random instances") {
    RngStream g(stream_key(62, 0));
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;
        RealTuple x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (auto& v : x) v = g.next_gaussian_pair().first;
        for (auto& v : y) v = g.next_gaussian_pair().first;
        const int q = 1 + static_cast<int>(g.next_u64() % 4);
        const double p = (trial % 2 == 0) ? 1.0 + 3.0 * g.next_uniform() : 0.05 + 0.9 * g.next_uniform();
        for (const auto& s : inequality_suite(x, y, q, p))
            if (s.applicable) CHECK(s.slack >= -1e-9);
    }
}

TEST_CASE("fractional Minkowski slack approaches the p = 1 slack as p -> 1-") {
    // fixed inputs; the n4 constant 2^{1/p-1} -> 1, so slack(n4; p) -> slack(n2; 1)
    const RealTuple x = {0.8, -1.4, 2.1};
    const RealTuple y = {1.1, 0.4, -0.6};
    const int q = 2;
    auto slack_of = [&](const char* name, double p) {
        for (const auto& s : inequality_suite(x, y, q, p))
            if (s.name == name) return s.slack;
        FAIL("missing slack");
        return 0.0;
    };
    const double at1 = slack_of("n2", 1.0);
    const double d05 = std::abs(slack_of("n4", 0.5) - at1);
    const double d09 = std::abs(slack_of("n4", 0.9) - at1);
    const double d099 = std::abs(slack_of("n4", 0.99) - at1);
    CHECK(d099 < d09);
    CHECK(d09 < d05);
    CHECK(d099 < 0.05 * (1 + std::abs(at1)));
}

TEST_CASE("random_doubly_stochastic rows and columns sum to one") {
    for (int n : {1, 2, 4}) {
        const auto d = random_doubly_stochastic(n, 5);
        for (int i = 0; i < n; ++i) {
            double row = 0, col = 0;
            for (int j = 0; j < n; ++j) {
                row += d[i][j];
                col += d[j][i];
                CHECK(d[i][j] >= 0);
            }
            CHECK_THAT(row, WithinAbs(1.0, 1e-12));
            CHECK_THAT(col, WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("schur_pair_check worked values and random ordering") {
    { // y = (2,0), q = 1: H_2(2,0) = h_2(2,0)/c_{2,2} = 4/3
        const auto rep = schur_pair_check({2, 0}, 1, 9);
        CHECK_THAT(rep.h2q_y, WithinRel(4.0 / 3.0, 1e-12));
        CHECK(rep.slack >= -1e-12);
        CHECK(majorizes(rep.x, rep.y));
    }
    { // constant tuples are fixed points of every doubly stochastic map: equality
        const auto rep = schur_pair_check({1.5, 1.5, 1.5}, 2, 11);
        for (std::size_t i = 0; i < rep.x.size(); ++i)
            CHECK_THAT(rep.x[i], WithinAbs(rep.y[i], 1e-12));
        CHECK_THAT(rep.slack, WithinAbs(0.0, 1e-12));
    }
    { // generated pairs stay ordered for q = 2 as well
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto rep = schur_pair_check({3, -1, 0}, 2, seed);
            CHECK(rep.slack >= -1e-9);
            // direct evaluation as the oracle
            const double direct =
                oracles::brute_h_real(rep.y, 4).real() / u128_to_double(dim_sym(3, 4)) -
                oracles::brute_h_real(rep.x, 4).real() / u128_to_double(dim_sym(3, 4));
            CHECK_THAT(rep.slack, WithinAbs(direct, 1e-9 * (1 + std::abs(direct))));
        }
    }
}

TEST_CASE("monotonicity of q -> H_q(x)^{1/q} on nonnegative tuples") {
    RngStream g(stream_key(63, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        RealTuple x(static_cast<std::size_t>(n));
        for (auto& v : x) v = std::abs(g.next_gaussian_pair().first);
        double prev = 0;
        for (int q = 1; q <= 5; ++q) {
            const double cur = std::pow(h_q(x, q).value, 1.0 / q);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}
