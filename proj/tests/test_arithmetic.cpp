#include <doctest.h>

#include <numeric>
#include <random>

#include "pgaut/arithmetic.hpp"
#include "oracles.hpp"

using namespace pgaut;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).n == 1);

    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize 720720 against trial-division oracle") {
    auto f = factorize(720720);
    auto expect = oracles::trial_factor(720720);
    REQUIRE(f.factors.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(f.factors[i].prime == expect[i].first);
        CHECK(f.factors[i].exponent == expect[i].second);
    }
    // product of prime^exponent reproduces n
    std::uint64_t prod = 1;
    for (auto [p, e] : f.factors)
        for (std::uint32_t i = 0; i < e; ++i) prod *= p;
    CHECK(prod == 720720);
}

TEST_CASE("factorize matches oracle on a range and on large inputs") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        auto f = factorize(n);
        auto expect = oracles::trial_factor(n);
        REQUIRE(f.factors.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(f.factors[i].prime == expect[i].first);
            CHECK(f.factors[i].exponent == expect[i].second);
        }
    }
    // primes strictly increasing
    auto f = factorize(999999937);  // a prime near 1e9
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].prime == 999999937);
}

TEST_CASE("euler_phi basics and closed form") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(1024) == 512);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    for (std::uint64_t d = 1; d <= 300; ++d)
        CHECK(euler_phi(d) == oracles::phi_by_counting(d));
}

TEST_CASE("euler_phi multiplicative on coprime arguments") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 5000);
    int done = 0;
    while (done < 200) {
        std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        ++done;
    }
}

TEST_CASE("divisors basics") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(30) == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("totient-sum identity: sum of phi(d) over d | n equals n") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("divisor lattice closed under gcd and lcm") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(1, 20000);
    for (int t = 0; t < 50; ++t) {
        std::uint64_t n = dist(rng);
        auto ds = divisors(n);
        std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
        for (int s = 0; s < 20; ++s) {
            std::uint64_t a = ds[pick(rng)], b = ds[pick(rng)];
            std::uint64_t g = std::gcd(a, b), l = std::lcm(a, b);
            CHECK(std::binary_search(ds.begin(), ds.end(), g));
            CHECK(std::binary_search(ds.begin(), ds.end(), l));
        }
        // sorted ascending
        CHECK(std::is_sorted(ds.begin(), ds.end()));
    }
}
