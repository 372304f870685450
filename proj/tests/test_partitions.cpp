#include <catch2/catch_amalgamated.hpp>

#include "matnorm/partitions.hpp"
#include "support/oracles.hpp"

using namespace matnorm;

namespace {
std::vector<int> parts_at(const std::vector<Partition>& ps, std::size_t i) { return ps[i].parts; }
} // namespace

TEST_CASE("partitions_of enumerates exactly, grouped by length, reverse-lex") {
    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(parts_at(p3, 0) == std::vector<int>{3});
    CHECK(parts_at(p3, 1) == std::vector<int>{2, 1});
    CHECK(parts_at(p3, 2) == std::vector<int>{1, 1, 1});

    const auto p1 = partitions_of(1);
    REQUIRE(p1.size() == 1);
    CHECK(parts_at(p1, 0) == std::vector<int>{1});

    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(parts_at(p4, 0) == std::vector<int>{4});
    CHECK(parts_at(p4, 1) == std::vector<int>{3, 1});
    CHECK(parts_at(p4, 2) == std::vector<int>{2, 2});
    CHECK(parts_at(p4, 3) == std::vector<int>{2, 1, 1});
    CHECK(parts_at(p4, 4) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition counts match the counting recurrence up to k = 30") {
    for (int k = 1; k <= 30; ++k)
        CHECK(partitions_of(k).size() == oracles::partition_count(k));
}

TEST_CASE("partitions_of rejects k outside [1, 64]") {
    CHECK_THROWS_AS(partitions_of(0), DomainError);
    CHECK_THROWS_AS(partitions_of(65), Overflow);
}

TEST_CASE("z_beta reproduces the classical cycle-type weights") {
    auto z_of = [](std::vector<int> parts) {
        return static_cast<unsigned long long>(z_beta(Partition::from_parts(std::move(parts))));
    };
    // k = 3 weights 1/3, 1/2, 1/6
    CHECK(z_of({3}) == 3);
    CHECK(z_of({2, 1}) == 2);
    CHECK(z_of({1, 1, 1}) == 6);
    // the (2,2) term carries 1/8
    CHECK(z_of({2, 2}) == 8);
    CHECK(z_of({1}) == 1);
    // k = 5 list
    CHECK(z_of({5}) == 5);
    CHECK(z_of({4, 1}) == 4);
    CHECK(z_of({3, 2}) == 6);
    CHECK(z_of({3, 1, 1}) == 6);
    CHECK(z_of({2, 2, 1}) == 8);
    CHECK(z_of({2, 1, 1, 1}) == 12);
    CHECK(z_of({1, 1, 1, 1, 1}) == 120);
}

TEST_CASE("sum over partitions of k!/z_beta equals k! exactly (cycle-type count)") {
    U128 kfact = 1;
    for (int k = 1; k <= 20; ++k) {
        kfact *= static_cast<U128>(k);
        U128 total = 0;
        for (const Partition& beta : partitions_of(k)) {
            const U128 z = z_beta(beta);
            REQUIRE(kfact % z == 0); // z_beta divides k!
            total += kfact / z;
        }
        CHECK(total == kfact); // i.e. sum of 1/z_beta is exactly 1
    }
}

TEST_CASE("dim_sym values and Pascal identity") {
    CHECK(static_cast<unsigned long long>(dim_sym(2, 2)) == 3);
    CHECK(static_cast<unsigned long long>(dim_sym(2, 4)) == 5);
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<unsigned long long>(dim_sym(n, 0)) == 1);

    for (int n = 2; n <= 20; n += 3)
        for (int k = 1; k <= 20; k += 2)
            CHECK(dim_sym(n, k) == dim_sym(n - 1, k) + dim_sym(n, k - 1));
}

TEST_CASE("dim_sym overflows loudly past 128 bits") {
    CHECK_THROWS_AS(dim_sym(100, 64), Overflow);
    // C(130, 65) still fits
    CHECK_NOTHROW(dim_sym(66, 65));
}

TEST_CASE("Partition::from_parts validates shape") {
    CHECK_THROWS_AS(Partition::from_parts({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition::from_parts({2, 0}), DomainError);
    const Partition p = Partition::from_parts({3, 3, 1});
    CHECK(p.k == 7);
    REQUIRE(p.multiplicities.size() == 2);
    CHECK(p.multiplicities[0] == std::pair<int, int>{3, 2});
    CHECK(p.multiplicities[1] == std::pair<int, int>{1, 1});
}
